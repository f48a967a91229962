#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/sampling.hpp"
#include "core/zernike.hpp"

using namespace zernlets;

namespace {

Eigen::MatrixXcd block_vandermonde(const ParameterPointSet& pts,
                                   IndexBlock block) {
  const int upper = index_unpack(block.hi - 1).n;
  Eigen::MatrixXcd m((Eigen::Index)pts.points.size(), block.width());
  for (size_t i = 0; i < pts.points.size(); ++i)
    m.row((Eigen::Index)i) =
        basis_row(upper, pts.points[i]).segment(block.lo, block.width());
  return m;
}

double condition_number(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0) /
         svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace

TEST_CASE("regular point counts and ring structure") {
  const auto p3 = regular_points(3);
  REQUIRE(p3.rings.size() == 2);
  CHECK(p3.rings[0].count == 7);
  CHECK(p3.rings[1].count == 3);
  CHECK(p3.points.size() == 10);

  const auto p8 = regular_points(8);
  REQUIRE(p8.rings.size() == 5);
  const int expect[] = {17, 13, 9, 5, 1};
  for (int i = 0; i < 5; ++i) CHECK(p8.rings[i].count == expect[i]);
  CHECK(p8.points.size() == 45);

  for (int N = 0; N <= 30; ++N)
    CHECK((int)regular_points(N).points.size() == space_dim(N));
}

TEST_CASE("ring-count arithmetic is an exact integer identity") {
  for (int N = 0; N <= 100; ++N) {
    const int k = N / 2 + 1;
    long long total = 0;
    for (int i = 1; i <= k; ++i) total += 2LL * N + 5 - 4 * i;
    CHECK(total == (long long)k * (2 * N + 3 - 2 * k));
    CHECK(total == (long long)space_dim(N));
  }
}

TEST_CASE("ring radii are strictly decreasing inside [0, 1)") {
  for (int N : {0, 1, 5, 8, 16, 31}) {
    const auto set = regular_points(N);
    double prev = 1.0;
    for (const auto& ring : set.rings) {
      CHECK(ring.radius < prev);
      CHECK(ring.radius >= 0.0);
      prev = ring.radius;
    }
  }
}

TEST_CASE("angles within a ring are equispaced with the stated offset") {
  const auto set = regular_points(5);
  size_t at = 0;
  for (const auto& ring : set.rings) {
    for (int l = 0; l < ring.count; ++l) {
      const auto& pt = set.points[at++];
      CHECK(pt.rho == ring.radius);
      CHECK(pt.theta ==
            doctest::Approx(ring.offset +
                            2.0 * std::numbers::pi * l / ring.count));
    }
  }
  CHECK(at == set.points.size());
}

TEST_CASE("random subset basics") {
  const auto source = regular_points(6);
  CHECK(source.points.size() == 28);
  const auto sub = random_subset(source, 18, 7);
  CHECK(sub.points.size() == 18);
  CHECK(sub.provenance == PointProvenance::RandomSubset);

  // Every chosen point is a source point.
  for (const auto& p : sub.points) {
    const bool found = std::any_of(
        source.points.begin(), source.points.end(), [&](PolarPoint s) {
          return s.rho == p.rho && s.theta == p.theta;
        });
    CHECK(found);
  }

  const auto again = random_subset(source, 18, 7);
  for (size_t i = 0; i < sub.points.size(); ++i) {
    CHECK(sub.points[i].rho == again.points[i].rho);
    CHECK(sub.points[i].theta == again.points[i].theta);
  }

  int distinct_pairs = 0;
  for (uint64_t s = 0; s < 5; ++s) {
    const auto a = random_subset(source, 18, 2 * s);
    const auto b = random_subset(source, 18, 2 * s + 1);
    bool same = true;
    for (size_t i = 0; i < a.points.size() && same; ++i)
      same = a.points[i].rho == b.points[i].rho &&
             a.points[i].theta == b.points[i].theta;
    if (!same) ++distinct_pairs;
  }
  CHECK(distinct_pairs == 5);

  CHECK_THROWS_AS(random_subset(source, 29, 0), std::invalid_argument);
}

TEST_CASE("duplicate points are rejected") {
  std::vector<PolarPoint> pts = {{0.5, 0.1}, {0.5, 0.1}};
  CHECK_THROWS_AS(make_parameter_set(pts, PointProvenance::Explicit),
                  numeric_error);
  std::vector<PolarPoint> outside = {{1.5, 0.0}};
  CHECK_THROWS_AS(make_parameter_set(outside, PointProvenance::Explicit),
                  numeric_error);
}

TEST_CASE("approximate Fekete selection on the level-3 block") {
  const auto source = regular_points(6);
  const auto candidates =
      make_parameter_set(source.points, PointProvenance::Explicit);
  const auto block = wavelet_block(3);
  CHECK(block.lo == 10);
  CHECK(block.hi == 28);

  const auto chosen = approximate_fekete(candidates, block, 18);
  CHECK(chosen.points.size() == 18);
  CHECK(chosen.provenance == PointProvenance::ApproximateFekete);
  for (const auto& p : chosen.points) {
    const bool found = std::any_of(
        source.points.begin(), source.points.end(), [&](PolarPoint s) {
          return s.rho == p.rho && s.theta == p.theta;
        });
    CHECK(found);
  }

  const Eigen::MatrixXcd square = block_vandermonde(chosen, block);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(square);
  CHECK(svd.singularValues().minCoeff() > 0.0);
  CHECK(std::abs(Eigen::FullPivLU<Eigen::MatrixXcd>(square).determinant()) >
        0.0);

  // Selection quality: at most the median condition of random subsets.
  const double fekete_cond = condition_number(square);
  std::vector<double> rand_conds;
  for (uint64_t s = 1; s <= 20; ++s) {
    const auto sub = random_subset(source, 18, s);
    rand_conds.push_back(condition_number(block_vandermonde(sub, block)));
  }
  std::sort(rand_conds.begin(), rand_conds.end());
  const double median =
      (rand_conds[9] + rand_conds[10]) / 2.0;
  CHECK(fekete_cond <= median);
}

TEST_CASE("Fekete with target equal to candidate count returns everything") {
  const auto source = regular_points(2);
  const auto candidates =
      make_parameter_set(source.points, PointProvenance::Explicit);
  const auto all =
      approximate_fekete(candidates, {0, (int)source.points.size()},
                         (int)source.points.size());
  CHECK(all.points.size() == source.points.size());
  for (size_t i = 0; i < all.points.size(); ++i) {
    CHECK(all.points[i].rho == source.points[i].rho);
    CHECK(all.points[i].theta == source.points[i].theta);
  }
}

TEST_CASE("Fekete reports rank deficiency") {
  // All candidates on one circle: the block restricted to a circle spans
  // only as many directions as there are distinct frequencies (13 here),
  // fewer than the 18 needed.
  std::vector<PolarPoint> circle;
  for (int l = 0; l < 24; ++l)
    circle.push_back({0.7, 2.0 * std::numbers::pi * l / 24});
  const auto candidates =
      make_parameter_set(circle, PointProvenance::Explicit);
  CHECK_THROWS_AS(approximate_fekete(candidates, wavelet_block(3), 18),
                  numeric_error);
}

TEST_CASE("wavelet parameter points per level") {
  const auto w0 = wavelet_parameter_points(0, PointStrategy::Fekete, 0);
  CHECK(w0.points.size() == 2);

  for (int level : {1, 2, 3, 4}) {
    const auto f = wavelet_parameter_points(level, PointStrategy::Fekete, 0);
    CHECK((int)f.points.size() == wavelet_dim(level));
    const auto r = wavelet_parameter_points(level, PointStrategy::Random, 11);
    CHECK((int)r.points.size() == wavelet_dim(level));
  }
}

TEST_CASE("detail dimensions") {
  CHECK(wavelet_dim(0) == 2);
  CHECK(wavelet_dim(1) == 3);
  CHECK(wavelet_dim(2) == 9);
  CHECK(wavelet_dim(3) == 18);
  CHECK(wavelet_dim(4) == 30);
  for (int N = 1; N <= 50; ++N)
    CHECK(space_dim(2 * N) - space_dim(N) == wavelet_dim(N));
}
