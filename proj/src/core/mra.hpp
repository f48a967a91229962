#pragma once

#include <vector>

#include "core/wavelet.hpp"

namespace zernlets {

// Dyadic ladder V_N = V_0 + W_0 + W_1 + W_2 + W_4 + ... + W_{N/2} for N a
// power of two; the level entries own disjoint single-index ranges covering
// 0 .. space_dim(N)-1.
struct MraLadder {
  int top_degree = 0;
  std::vector<int> levels;  // wavelet levels: 0, 1, 2, 4, ..., N/2

  static MraLadder for_degree(int N);
  IndexBlock level_block(size_t li) const { return wavelet_block(levels[li]); }
};

struct MultiscaleBasis {
  MraLadder ladder;
  std::vector<WaveletBasis> bases;      // one per ladder level
  std::vector<DualWaveletBasis> duals;  // matching entries
};

MultiscaleBasis multiscale_build(int N, PointStrategy strategy, uint64_t seed,
                                 const RadiiProvider& radii = chebyshev_ring_radii);

// Wavelet analysis of the projection onto V_N: one coefficient per basis
// function plus the constant component.
struct Decomposition {
  int top_degree = 0;
  complexd v0 = 0.0;
  std::vector<int> levels;
  std::vector<Eigen::VectorXcd> coefficients;  // <f, psi_{M,j}> per level
};

// Orthogonal projection onto the degree-N space: coefficient truncation.
DiskPolynomial project_onto_VN(const DiskPolynomial& f, int N);

Decomposition decompose(const DiskPolynomial& f, const MultiscaleBasis& basis);
DiskPolynomial reconstruct(const Decomposition& d, const MultiscaleBasis& basis);

// Substitution test for the dilation property: p in V_d implies
// q(x, y) = p(x^2, y^2) lies in V_{2d}.  Returns membership of q, checked by
// refitting the substituted monomial expansion against the basis.
bool dilation_check(const DiskPolynomial& p, double tol = 1e-10);

}  // namespace zernlets
