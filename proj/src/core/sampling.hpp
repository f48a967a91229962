#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/types.hpp"

namespace zernlets {

struct Ring {
  double radius = 0.0;
  int count = 0;
  double offset = 0.0;
};

// Ring-structured nodes: floor(N/2)+1 rings, 2N+5-4i nodes on ring i,
// totalling exactly space_dim(N).
struct RegularPointSet {
  int degree = 0;
  std::vector<Ring> rings;
  std::vector<PolarPoint> points;
};

// Maps a ring count k to k strictly decreasing radii in [0, 1).
using RadiiProvider = std::function<std::vector<double>(int)>;

// Default radii: cos(pi (2i-1) / (4k+2)), clustering toward the boundary.
std::vector<double> chebyshev_ring_radii(int k);

RegularPointSet regular_points(int N,
                               const RadiiProvider& radii = chebyshev_ring_radii);

enum class PointProvenance { RandomSubset, ApproximateFekete, Explicit };

struct ParameterPointSet {
  std::vector<PolarPoint> points;
  PointProvenance provenance = PointProvenance::Explicit;
  uint64_t seed = 0;
};

// Validates disk membership and pairwise distinctness (> 1e-12).
ParameterPointSet make_parameter_set(std::vector<PolarPoint> points,
                                     PointProvenance provenance,
                                     uint64_t seed = 0);

// Uniform subset without replacement, reproducible per seed.
ParameterPointSet random_subset(const RegularPointSet& source, int size,
                                uint64_t seed);

// Greedy pivoted-QR selection of `target` candidates whose square
// Vandermonde block over single indices [block.lo, block.hi) is nonsingular;
// target must equal the block width.
ParameterPointSet approximate_fekete(const ParameterPointSet& candidates,
                                     IndexBlock block, int target);

enum class PointStrategy { Fekete, Random };

// Parameter points for the level-N detail space: candidates are the regular
// points of the block's upper degree, reduced to wavelet_dim(N) points by the
// chosen strategy.
ParameterPointSet wavelet_parameter_points(
    int level, PointStrategy strategy, uint64_t seed,
    const RadiiProvider& radii = chebyshev_ring_radii);

}  // namespace zernlets
