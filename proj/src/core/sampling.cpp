#include "core/sampling.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "core/rng.hpp"
#include "core/zernike.hpp"

namespace zernlets {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> chebyshev_ring_radii(int k) {
  std::vector<double> r(k);
  for (int i = 1; i <= k; ++i) r[i - 1] = std::cos(kPi * (2 * i - 1) / (4 * k + 2));
  return r;
}

RegularPointSet regular_points(int N, const RadiiProvider& radii) {
  if (N < 0) throw std::invalid_argument("degree must be >= 0");
  RegularPointSet set;
  set.degree = N;
  const int k = N / 2 + 1;
  const auto lambda = radii(k);
  if ((int)lambda.size() != k)
    throw std::invalid_argument("radii provider returned wrong count");
  for (int i = 1; i <= k; ++i) {
    const double r = lambda[i - 1];
    if (r < 0.0 || r >= 1.0 || (i > 1 && r >= lambda[i - 2]))
      throw numeric_error("ring radii must satisfy 1 > r_1 > ... > r_k >= 0");
    const int count = 2 * N + 5 - 4 * i;
    const double offset = (i - 1) * kPi / count;
    set.rings.push_back({r, count, offset});
    for (int l = 0; l < count; ++l)
      set.points.push_back({r, offset + 2.0 * kPi * l / count});
  }
  if ((int)set.points.size() != space_dim(N))
    throw std::logic_error("regular point count mismatch");
  return set;
}

ParameterPointSet make_parameter_set(std::vector<PolarPoint> points,
                                     PointProvenance provenance,
                                     uint64_t seed) {
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].rho < 0.0 || points[i].rho > 1.0 + 1e-12)
      throw numeric_error("parameter point outside the closed disk");
    for (size_t j = i + 1; j < points.size(); ++j) {
      const double dx = polar_x(points[i]) - polar_x(points[j]);
      const double dy = polar_y(points[i]) - polar_y(points[j]);
      if (std::hypot(dx, dy) <= 1e-12)
        throw numeric_error("duplicate parameter points");
    }
  }
  return {std::move(points), provenance, seed};
}

ParameterPointSet random_subset(const RegularPointSet& source, int size,
                                uint64_t seed) {
  const int total = (int)source.points.size();
  if (size < 0 || size > total)
    throw std::invalid_argument("subset size exceeds source point count");
  std::vector<int> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(seed);
  for (int i = 0; i < size; ++i)
    std::swap(idx[i], idx[i + (int)rng.bounded(total - i)]);
  std::vector<PolarPoint> chosen(size);
  for (int i = 0; i < size; ++i) chosen[i] = source.points[idx[i]];
  return make_parameter_set(std::move(chosen), PointProvenance::RandomSubset,
                            seed);
}

ParameterPointSet approximate_fekete(const ParameterPointSet& candidates,
                                     IndexBlock block, int target) {
  const int width = block.width();
  const int count = (int)candidates.points.size();
  if (target != width)
    throw std::invalid_argument("target must equal the index-block width");
  if (count < target)
    throw std::invalid_argument("fewer candidates than requested points");
  if (count == target) {
    auto out = candidates;
    out.provenance = PointProvenance::ApproximateFekete;
    return out;
  }

  const int upper = index_unpack(block.hi - 1).n;
  Eigen::MatrixXcd vander(width, count);
  for (int c = 0; c < count; ++c)
    vander.col(c) =
        basis_row(upper, candidates.points[c]).segment(block.lo, width);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(vander);
  if (qr.rank() < width)
    throw numeric_error("candidate set spans fewer than " +
                        std::to_string(width) + " independent directions");
  const auto& perm = qr.colsPermutation().indices();
  std::vector<PolarPoint> chosen(width);
  for (int i = 0; i < width; ++i) chosen[i] = candidates.points[perm[i]];
  return make_parameter_set(std::move(chosen),
                            PointProvenance::ApproximateFekete, 0);
}

ParameterPointSet wavelet_parameter_points(int level, PointStrategy strategy,
                                           uint64_t seed,
                                           const RadiiProvider& radii) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  const auto source = regular_points(wavelet_upper_degree(level), radii);
  const int dim = wavelet_dim(level);
  if (strategy == PointStrategy::Random)
    return random_subset(source, dim, seed);
  auto candidates = make_parameter_set(source.points, PointProvenance::Explicit);
  return approximate_fekete(candidates, wavelet_block(level), dim);
}

}  // namespace zernlets
