#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/quadrature.hpp"
#include "core/zernike.hpp"

using namespace zernlets;

namespace {

constexpr double kPi = std::numbers::pi;

PolarPoint random_disk_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return {std::sqrt(u(rng)), 2.0 * kPi * u(rng)};
}

DiskPolynomial random_poly(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DiskPolynomial p = DiskPolynomial::zero(degree);
  for (int j = 0; j < p.coeffs.size(); ++j)
    p.coeffs[j] = complexd(u(rng), u(rng));
  return p;
}

DiskPolynomial random_real_valued_poly(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DiskPolynomial p = DiskPolynomial::zero(degree);
  for (int n = 0; n <= degree; ++n)
    for (int ma = n % 2; ma <= n; ma += 2) {
      if (ma == 0) {
        p.coeffs[index_pack(n, 0)] = u(rng);
      } else {
        const complexd c(u(rng), u(rng));
        p.coeffs[index_pack(n, ma)] = c;
        p.coeffs[index_pack(n, -ma)] = std::conj(c);
      }
    }
  return p;
}

// Quadrature Gram matrix of the complex basis up to degree N.
Eigen::MatrixXcd quadrature_gram(int N) {
  const auto quad = DiskQuadrature::for_degree(N);
  const auto pts = quad.grid_points();
  const auto w = quad.grid_weights();
  Eigen::MatrixXcd rows((Eigen::Index)pts.size(), space_dim(N));
  for (size_t i = 0; i < pts.size(); ++i)
    rows.row((Eigen::Index)i) = basis_row(N, pts[i]).transpose();
  return rows.adjoint() * w.asDiagonal() * rows;
}

}  // namespace

TEST_CASE("radial polynomial closed-form values") {
  CHECK(radial_eval(0, 0, 0.7) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(radial_eval(2, 0, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(radial_eval(3, 1, 0.5) == doctest::Approx(-0.625).epsilon(1e-14));
  CHECK(radial_eval(4, 2, 0.5) ==
        doctest::Approx(4 * 0.0625 - 3 * 0.25).epsilon(1e-14));
}

TEST_CASE("radial polynomial equals 1 at r = 1") {
  for (int n = 0; n <= 12; ++n)
    for (int m = n % 2; m <= n; m += 2)
      CHECK(std::abs(radial_eval(n, m, 1.0) - 1.0) <= 1e-9);
}

TEST_CASE("radial polynomial vanishing conventions") {
  CHECK(radial_eval(-2, 0, 0.5) == 0.0);
  CHECK(radial_eval(2, 3, 0.5) == 0.0);   // |m| > n
  CHECK(radial_eval(3, 0, 0.5) == 0.0);   // parity mismatch
}

TEST_CASE("radial eval rejects radii outside the disk") {
  CHECK_THROWS_AS(radial_eval(2, 0, 1.5), numeric_error);
  CHECK_THROWS_AS(radial_eval(2, 0, -0.5), numeric_error);
  CHECK(radial_eval(2, 0, 1.0 + 5e-13) == doctest::Approx(1.0));
}

TEST_CASE("radial coefficients stay exact at high degree") {
  // Sum of |coefficients| at r = 1 must collapse to exactly 1.
  for (int n : {20, 30, 40})
    for (int m : {0, n - 2, n})
      CHECK(std::abs(radial_eval(n, m, 1.0) - 1.0) <= 1e-8);
}

TEST_CASE("complex basis values") {
  const double c00 = 0.5641895835477563;  // sqrt(1/pi)
  CHECK(zernike_eval({0, 0}, {0.3, 1.2}).real() ==
        doctest::Approx(c00).epsilon(1e-14));
  CHECK(zernike_eval({0, 0}, {0.3, 1.2}).imag() == doctest::Approx(0.0));
  CHECK(zernike_eval({1, 1}, {1.0, 0.0}).real() ==
        doctest::Approx(0.7978845608028654).epsilon(1e-14));  // sqrt(2/pi)
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_disk_point(rng);
    const auto a = zernike_eval({2, 2}, p);
    const auto b = zernike_eval({2, -2}, p);
    CHECK(std::abs(b - std::conj(a)) <= 1e-15);
  }
}

TEST_CASE("real basis values") {
  CHECK(zernike_real_eval({0, 0}, {0.9, 2.0}) ==
        doctest::Approx(0.5641895835477563).epsilon(1e-14));
  for (double r : {0.2, 0.5, 0.9})
    CHECK(zernike_real_eval({1, -1}, {r, kPi / 2}) ==
          doctest::Approx(std::sqrt(4.0 / kPi) * r).epsilon(1e-13));
}

TEST_CASE("single index bijection") {
  CHECK(index_pack(0, 0) == 0);
  CHECK(index_pack(2, -2) == 3);
  CHECK(index_pack(2, 0) == 4);
  CHECK(index_pack(2, 2) == 5);
  CHECK(index_pack(8, 8) == 44);
  CHECK(space_dim(8) == 45);
  for (int j = 0; j <= 5000; ++j) {
    const auto idx = index_unpack(j);
    CHECK(index_valid(idx.n, idx.m));
    CHECK(index_pack(idx.n, idx.m) == j);
  }
  CHECK_THROWS_AS(index_pack(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(index_pack(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(index_pack(-1, 1), std::invalid_argument);
}

TEST_CASE("degree-count identity") {
  for (int N = 0; N <= 40; ++N) {
    int count = 0;
    for (int n = 0; n <= N; ++n)
      for (int m = -n; m <= n; ++m)
        if (index_valid(n, m)) ++count;
    CHECK(count == space_dim(N));
  }
}

TEST_CASE("quadrature weights sum to the disk area") {
  for (int N : {0, 3, 8})
    CHECK(DiskQuadrature::for_degree(N).weight_sum() ==
          doctest::Approx(kPi).epsilon(1e-13));
}

TEST_CASE("quadrature orthonormality of the complex basis up to degree 12") {
  const int N = 12;
  const Eigen::MatrixXcd gram = quadrature_gram(N);
  const double dev =
      (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff();
  CHECK(dev <= 1e-10);
}

TEST_CASE("quadrature orthonormality of the real basis up to degree 8") {
  const int N = 8;
  const auto quad = DiskQuadrature::for_degree(N);
  const auto pts = quad.grid_points();
  const auto w = quad.grid_weights();
  Eigen::MatrixXd rows((Eigen::Index)pts.size(), space_dim(N));
  for (size_t i = 0; i < pts.size(); ++i)
    rows.row((Eigen::Index)i) = real_basis_row(N, pts[i]).transpose();
  const Eigen::MatrixXd gram = rows.transpose() * w.asDiagonal() * rows;
  const double dev =
      (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff();
  CHECK(dev <= 1e-10);
}

TEST_CASE("coefficient-space inner product") {
  DiskPolynomial zj = DiskPolynomial::zero(3);
  DiskPolynomial zk = DiskPolynomial::zero(3);
  zj.coeffs[2] = 1.0;
  zk.coeffs[5] = 1.0;
  CHECK(std::abs(inner_product(zj, zk)) == 0.0);
  CHECK(inner_product(zj, zj).real() == doctest::Approx(1.0));

  std::mt19937_64 rng(7);
  const auto p = random_poly(6, rng);
  const auto q = random_poly(6, rng);
  const complexd exact = inner_product(p, q);
  CHECK(inner_product(p, p).real() >= 0.0);
  CHECK(std::abs(inner_product(p, p).imag()) <= 1e-14);

  const auto quad = DiskQuadrature::for_degree(6);
  const complexd numeric = quad.inner_product(
      [&](PolarPoint pt) { return eval_poly(p, pt); },
      [&](PolarPoint pt) { return eval_poly(q, pt); });
  CHECK(std::abs(numeric - exact) <= 1e-10);
}

TEST_CASE("shorter coefficient vectors are zero-padded") {
  std::mt19937_64 rng(19);
  const auto p = random_poly(3, rng);
  const auto q = random_poly(6, rng);
  CHECK(std::abs(inner_product(p, q) - inner_product(embed(p, 6), q)) <=
        1e-15);
}

TEST_CASE("eval_poly basics") {
  DiskPolynomial c = DiskPolynomial::zero(0);
  c.coeffs[0] = std::sqrt(kPi);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto pt = random_disk_point(rng);
    CHECK(std::abs(eval_poly(c, pt) - 1.0) <= 1e-14);
  }

  DiskPolynomial z4 = DiskPolynomial::zero(2);
  z4.coeffs[4] = 1.0;
  CHECK(std::abs(eval_poly(z4, {0.5, 1.0}) -
                 zernike_eval({2, 0}, {0.5, 1.0})) <= 1e-15);
}

TEST_CASE("eval_poly matches term-by-term brute force") {
  std::mt19937_64 rng(23);
  const auto p = random_poly(5, rng);
  for (int t = 0; t < 50; ++t) {
    const auto pt = random_disk_point(rng);
    complexd brute = 0.0;
    for (int j = 0; j < p.coeffs.size(); ++j)
      brute += p.coeffs[j] * zernike_eval(index_unpack(j), pt);
    CHECK(std::abs(eval_poly(p, pt) - brute) <= 1e-12);
  }
}

TEST_CASE("three-term recurrence coefficients") {
  CHECK(three_term_a(2, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(three_term_b(2, 0) ==
        doctest::Approx(1.0 / std::sqrt(15.0)).epsilon(1e-15));
  CHECK(three_term_a(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("three-term recurrence identity") {
  std::mt19937_64 rng(31);
  double worst = 0.0;
  for (int n = 0; n <= 8; ++n)
    for (int m = -n; m <= n; ++m) {
      if (!index_valid(n, m)) continue;
      for (int t = 0; t < 100; ++t) {
        const auto pt = random_disk_point(rng);
        const complexd lhs =
            pt.rho * pt.rho * zernike_eval({n, m}, pt);
        const complexd lower =
            index_valid(n - 2, m) ? zernike_eval({n - 2, m}, pt) : 0.0;
        const complexd rhs = three_term_apply(
            n, m, lower, zernike_eval({n, m}, pt), zernike_eval({n + 2, m}, pt));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
  CHECK(worst <= 1e-10);
}

TEST_CASE("multiply_r2 agrees with pointwise multiplication") {
  std::mt19937_64 rng(37);
  const auto p = random_poly(5, rng);
  const auto rp = multiply_r2(p);
  CHECK(rp.max_degree == 7);
  for (int t = 0; t < 30; ++t) {
    const auto pt = random_disk_point(rng);
    CHECK(std::abs(eval_poly(rp, pt) -
                   pt.rho * pt.rho * eval_poly(p, pt)) <= 1e-12);
  }
}

TEST_CASE("multiply_z agrees with pointwise multiplication") {
  std::mt19937_64 rng(41);
  const auto p = random_poly(4, rng);
  const auto zp = multiply_z(p);
  CHECK(zp.max_degree == 5);
  for (int t = 0; t < 30; ++t) {
    const auto pt = random_disk_point(rng);
    const complexd z = std::polar(pt.rho, pt.theta);
    CHECK(std::abs(eval_poly(zp, pt) - z * eval_poly(p, pt)) <= 1e-12);
  }
}

TEST_CASE("real coefficient sheet conversions") {
  DiskPolynomial p = DiskPolynomial::zero(1);
  p.coeffs[index_pack(1, 1)] = 0.5;
  p.coeffs[index_pack(1, -1)] = 0.5;
  const auto rc = complex_to_real_coeffs(p);
  bool found = false;
  for (const auto& row : rc.rows)
    if (row.n == 1 && row.m == 1) {
      found = true;
      CHECK(row.A == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(row.B == doctest::Approx(0.0));
    }
  CHECK(found);

  std::mt19937_64 rng(43);
  const auto q = random_real_valued_poly(6, rng);
  const auto back = real_to_complex_coeffs(complex_to_real_coeffs(q));
  CHECK((back.coeffs - q.coeffs).cwiseAbs().maxCoeff() <= 1e-14);

  // m = 0 rows carry no B and map back to real c_{n0}.
  for (const auto& row : complex_to_real_coeffs(q).rows)
    if (row.m == 0) CHECK(row.B == 0.0);

  DiskPolynomial bad = DiskPolynomial::zero(2);
  bad.coeffs[index_pack(2, 2)] = complexd(1.0, 0.0);
  bad.coeffs[index_pack(2, -2)] = complexd(0.0, 0.0);
  CHECK_THROWS_AS(complex_to_real_coeffs(bad), numeric_error);
}

TEST_CASE("real-basis coefficients reproduce the polynomial") {
  std::mt19937_64 rng(47);
  const auto p = random_real_valued_poly(5, rng);
  const Eigen::VectorXd g = complex_to_real_basis(p.coeffs);
  CHECK(g.norm() == doctest::Approx(p.coeffs.norm()).epsilon(1e-13));
  for (int t = 0; t < 25; ++t) {
    const auto pt = random_disk_point(rng);
    const double direct = eval_poly(p, pt).real();
    const double viag = g.dot(real_basis_row(5, pt));
    CHECK(std::abs(eval_poly(p, pt).imag()) <= 1e-13);
    CHECK(std::abs(direct - viag) <= 1e-12);
  }
  const Eigen::VectorXcd back = real_basis_to_complex(g);
  CHECK((back - p.coeffs).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("monomial expansion") {
  // Degree-1 elements are exactly linear in x, y.
  const auto mono = monomial_coeffs({1, -1});
  CHECK(std::abs(mono(1, 0) - std::sqrt(2.0 / kPi)) <= 1e-14);
  CHECK(std::abs(mono(0, 1) - complexd(0, -std::sqrt(2.0 / kPi))) <= 1e-14);

  std::mt19937_64 rng(53);
  const auto p = random_poly(5, rng);
  const auto table = to_monomials(p);
  for (int t = 0; t < 30; ++t) {
    const auto pt = random_disk_point(rng);
    const complexd via_mono =
        eval_monomials(table, polar_x(pt), polar_y(pt));
    CHECK(std::abs(via_mono - eval_poly(p, pt)) <= 1e-11);
  }
}
