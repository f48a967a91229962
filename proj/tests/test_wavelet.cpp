#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "core/kernel.hpp"
#include "core/quadrature.hpp"
#include "core/scaling.hpp"
#include "core/wavelet.hpp"

using namespace zernlets;

namespace {

constexpr double kPi = std::numbers::pi;

DiskPolynomial random_block_poly(int level, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const IndexBlock b = wavelet_block(level);
  DiskPolynomial p = DiskPolynomial::zero(wavelet_upper_degree(level));
  for (int l = b.lo; l < b.hi; ++l) p.coeffs[l] = complexd(u(rng), u(rng));
  return p;
}

WaveletBasis fekete_basis(int level) {
  return wavelet_build(level,
                       wavelet_parameter_points(level, PointStrategy::Fekete, 0));
}

}  // namespace

TEST_CASE("wavelets are kernel differences") {
  std::mt19937_64 rng(3);
  for (int level = 0; level <= 5; ++level) {
    const auto params =
        wavelet_parameter_points(level, PointStrategy::Random, 17 + level);
    const auto basis = wavelet_build(level, params);
    const int upper = wavelet_upper_degree(level);
    for (int j = 0; j < basis.dimension(); ++j) {
      const auto hi = kernel_build(upper, params.points[j]);
      const auto lo = kernel_build(level, params.points[j]);
      const auto diff = subtract(hi.poly, embed(lo.poly, upper));
      CHECK((basis.function(j).coeffs - diff.coeffs).cwiseAbs().maxCoeff() <=
            1e-12);
    }
  }
}

TEST_CASE("level dimensions and block support") {
  CHECK(fekete_basis(1).dimension() == 3);
  CHECK(fekete_basis(2).dimension() == 9);
  CHECK(fekete_basis(3).dimension() == 18);
  CHECK(fekete_basis(4).dimension() == 30);

  const auto w0 = fekete_basis(0);
  CHECK(w0.dimension() == 2);
  for (int j = 0; j < 2; ++j) {
    const auto f = w0.function(j);
    CHECK(std::abs(f.coeffs[0]) == 0.0);  // no constant component
    CHECK(f.coeffs.size() == 3);
  }

  const auto w3 = fekete_basis(3);
  for (int j = 0; j < w3.dimension(); ++j) {
    const auto f = w3.function(j);
    for (int l = 0; l < wavelet_block(3).lo; ++l)
      CHECK(std::abs(f.coeffs[l]) == 0.0);
  }
}

TEST_CASE("wrong parameter count is rejected") {
  const auto params = wavelet_parameter_points(2, PointStrategy::Fekete, 0);
  CHECK_THROWS_AS(wavelet_build(3, params), std::invalid_argument);
}

TEST_CASE("Gram identity: inner products equal point evaluations") {
  for (int level = 1; level <= 5; ++level) {
    const auto basis = fekete_basis(level);
    double worst = 0.0;
    for (int j = 0; j < basis.dimension(); ++j)
      for (int k = 0; k < basis.dimension(); ++k) {
        const complexd gram =
            inner_product(basis.function(j), basis.function(k));
        const double point = basis.eval(k, basis.parameters.points[j]);
        worst = std::max(worst, std::abs(gram - point));
      }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("wavelets are orthogonal to every scaling function") {
  const int level = 2;
  const auto wb = fekete_basis(level);
  const auto sb = scaling_build(level);
  // Exact in coefficient space: index blocks are disjoint.
  for (int j = 0; j < wb.dimension(); ++j)
    for (int k = 0; k < space_dim(level); ++k)
      CHECK(std::abs(inner_product(wb.function(j), sb.functions[k].poly)) ==
            0.0);
  // Quadrature cross-check on a few pairs.
  const auto quad = DiskQuadrature::for_degree(wavelet_upper_degree(level));
  for (int j : {0, 4, 8})
    for (int k : {0, 3, 5}) {
      const complexd numeric = quad.inner_product(
          [&](PolarPoint pt) { return complexd(wb.eval(j, pt), 0.0); },
          [&](PolarPoint pt) {
            return eval_poly(sb.functions[k].poly, pt);
          });
      CHECK(std::abs(numeric) <= 1e-9);
    }
}

TEST_CASE("independence gate") {
  for (int level = 1; level <= 5; ++level)
    CHECK(independence_gate(fekete_basis(level)).ok);

  // Two parameter points with the same block values (theta shifted by pi at
  // equal radius makes every even-frequency entry coincide) defeat level 1.
  const auto degenerate = make_parameter_set(
      {{0.6, 0.4}, {0.6, 0.4 + kPi}, {0.3, 1.0}}, PointProvenance::Explicit);
  const auto bad = wavelet_build(1, degenerate);
  CHECK_FALSE(independence_gate(bad).ok);
  CHECK_THROWS_AS(dual_build(bad), numeric_error);

  int random_pass = 0;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    const auto params =
        wavelet_parameter_points(3, PointStrategy::Random, seed);
    if (independence_gate(wavelet_build(3, params)).ok) ++random_pass;
  }
  CHECK(random_pass >= 1);
}

TEST_CASE("wavelet coefficients") {
  const int level = 2;
  const auto basis = fekete_basis(level);

  const auto zero = DiskPolynomial::zero(wavelet_upper_degree(level));
  CHECK(wavelet_coefficients(zero, basis).cwiseAbs().maxCoeff() == 0.0);

  // f = psi_k gives the k-th column of the Gram matrix.
  for (int k : {0, 5}) {
    const auto c = wavelet_coefficients(basis.function(k), basis);
    for (int j = 0; j < basis.dimension(); ++j)
      CHECK(std::abs(c[j] - inner_product(basis.function(k),
                                          basis.function(j))) <= 1e-12);
  }

  // Quadrature cross-check.
  std::mt19937_64 rng(41);
  const auto f = random_block_poly(level, rng);
  const auto c = wavelet_coefficients(f, basis);
  const auto quad = DiskQuadrature::for_degree(wavelet_upper_degree(level));
  for (int j = 0; j < basis.dimension(); ++j) {
    const complexd numeric = quad.inner_product(
        [&](PolarPoint pt) { return eval_poly(f, pt); },
        [&](PolarPoint pt) { return complexd(basis.eval(j, pt), 0.0); });
    CHECK(std::abs(numeric - c[j]) <= 1e-9);
  }
}

TEST_CASE("support outside the block is ignored by projection") {
  const int level = 1;
  const auto basis = fekete_basis(level);
  std::mt19937_64 rng(43);
  auto f = random_block_poly(level, rng);
  auto g = f;
  g.coeffs[0] = 7.0;  // scaling-range junk
  CHECK((wavelet_coefficients(f, basis) - wavelet_coefficients(g, basis))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("dual reconstruction in both readings") {
  std::mt19937_64 rng(47);
  for (int level : {1, 2, 3, 4}) {
    const auto basis = fekete_basis(level);
    const auto duals = dual_build(basis);
    for (int t = 0; t < 20; ++t) {
      const auto f = random_block_poly(level, rng);

      // f = sum_j <f, psi_j> dual_j
      const auto analysis = wavelet_coefficients(f, basis);
      const auto rec = dual_reconstruct(analysis, basis, duals);
      CHECK((rec.coeffs - f.coeffs).cwiseAbs().maxCoeff() <= 1e-8);

      // f = sum_j <f, dual_j> psi_j
      const IndexBlock b = basis.block();
      DiskPolynomial rec2 = DiskPolynomial::zero(basis.upper_degree());
      for (int j = 0; j < basis.dimension(); ++j) {
        const complexd cj = inner_product(f, duals.function(j, b));
        rec2.coeffs.segment(b.lo, b.width()) +=
            cj * basis.coeff_block.row(j).transpose();
      }
      CHECK((rec2.coeffs - f.coeffs).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("diagonal Gram makes duals scalar multiples of the wavelets") {
  // Level 0 with parameters a quarter turn apart: the two block columns are
  // orthogonal over the points, so A*A is diagonal.
  const auto params = make_parameter_set({{0.7, 0.0}, {0.7, kPi / 2}},
                                         PointProvenance::Explicit);
  const auto basis = wavelet_build(0, params);
  const Eigen::MatrixXcd a = basis.vandermonde();
  const Eigen::MatrixXcd gram = a.adjoint() * a;
  CHECK(std::abs(gram(0, 1)) <= 1e-14);
  CHECK(std::abs(gram(1, 0)) <= 1e-14);

  const auto duals = dual_build(basis);
  for (int j = 0; j < 2; ++j) {
    // dual_j = psi_j / gram_jj componentwise
    const Eigen::VectorXcd expect =
        basis.coeff_block.row(j).transpose() / gram(j, j).real();
    CHECK((duals.dual_block.row(j).transpose() - expect)
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
}

TEST_CASE("localization inside the detail space") {
  std::mt19937_64 rng(53);
  const int level = 3;
  const auto basis = fekete_basis(level);
  for (int j : {0, 7, 17}) {
    const PolarPoint pj = basis.parameters.points[j];
    const double self = basis.eval(j, pj);
    CHECK(self > 0.0);
    const double bound = 1.0 / std::sqrt(self);
    CHECK(norm_l2(basis.function(j)) / self ==
          doctest::Approx(bound).epsilon(1e-12));
    for (int t = 0; t < 50; ++t) {
      auto f = random_block_poly(level, rng);
      const complexd v = eval_poly(f, pj);
      if (std::abs(v) < 1e-6) continue;
      f = scale(f, 1.0 / v);
      CHECK(norm_l2(f) >= bound - 1e-12);
    }
  }
}

TEST_CASE("discretized frame operators") {
  const int level = 2;
  const auto basis = fekete_basis(level);
  const auto quad = DiskQuadrature::make(2 * level + 1, 12);
  const auto samples = quad.grid_points();  // 60 = 4 * J_4 points
  const Eigen::VectorXd weights = quad.grid_weights();

  auto ops = discretized_frame_ops(basis, samples);
  CHECK(ops.rank == basis.dimension());
  CHECK(ops.frame_operator.rows() == (Eigen::Index)samples.size());

  // Synthesis columns are pointwise samples of the wavelets.
  for (int j = 0; j < basis.dimension(); ++j)
    for (size_t i = 0; i < samples.size(); ++i)
      CHECK(std::abs(ops.synthesis((Eigen::Index)i, j) -
                     basis.eval(j, samples[i])) <= 1e-12);

  // Discrete dual-frame identity: vectors in the synthesis range are
  // perfectly rebuilt from their discretized-dual coefficients.
  std::mt19937_64 rng(59);
  const auto f = random_block_poly(level, rng);
  const Eigen::VectorXcd sampled =
      ops.sampled_block *
      f.coeffs.segment(basis.block().lo, basis.block().width());
  const Eigen::VectorXcd rebuilt =
      ops.synthesis * (ops.duals.adjoint() * sampled);
  CHECK((rebuilt - sampled).cwiseAbs().maxCoeff() <= 1e-9);

  // With quadrature weights the discrete geometry matches L2 exactly, so the
  // discretized duals coincide with the continuous duals sampled.
  auto wops = discretized_frame_ops(basis, samples, weights);
  const auto duals = dual_build(basis);
  const Eigen::MatrixXcd dual_samples =
      wops.sampled_block * duals.dual_block.transpose();
  CHECK((wops.duals - dual_samples).cwiseAbs().maxCoeff() <= 1e-6);

  CHECK_THROWS_AS(
      discretized_frame_ops(basis, {samples[0], samples[1]}, std::nullopt),
      std::invalid_argument);
}
