#pragma once

#include <optional>

#include "core/sampling.hpp"
#include "core/zernike.hpp"

namespace zernlets {

// Detail-space basis at a level: difference-of-kernels functions anchored at
// the parameter points.  Each function lives on the single-index block
// wavelet_block(level); coeff_block row j holds conj(Z_l(p_j)) over the
// block, i.e. the block coefficients of psi_j.
struct WaveletBasis {
  int level = 0;
  ParameterPointSet parameters;
  Eigen::MatrixXcd coeff_block;

  IndexBlock block() const { return wavelet_block(level); }
  int upper_degree() const { return wavelet_upper_degree(level); }
  int dimension() const { return wavelet_dim(level); }

  // psi_j embedded in the degree-upper space.
  DiskPolynomial function(int j) const;
  double eval(int j, PolarPoint pt) const;

  // Vandermonde over the block: row j = Z_l(p_j).  This analysis matrix is
  // distinct from the square collocation matrix of the scaling construction,
  // even though both play an "A" role.
  Eigen::MatrixXcd vandermonde() const { return coeff_block.conjugate(); }
};

WaveletBasis wavelet_build(int level, const ParameterPointSet& params);

struct GateResult {
  bool ok = false;
  double condition = 0.0;
  double smallest_singular = 0.0;
};

// Linear independence of the wavelet rows; arbitrary parameter points do not
// guarantee it, so every downstream consumer checks this first.
GateResult independence_gate(const WaveletBasis& basis);

// <f, psi_j> for all j; f is first projected onto the block.
Eigen::VectorXcd wavelet_coefficients(const DiskPolynomial& f,
                                      const WaveletBasis& basis);

// Dual functions: gram_solve(A* A) applied to each wavelet, giving perfect
// reconstruction f = sum_j <f, psi_j> dual_j on the detail space.
struct DualWaveletBasis {
  int level = 0;
  Eigen::MatrixXcd dual_block;  // row j = block coefficients of dual_j

  DiskPolynomial function(int j, IndexBlock block) const;
};

DualWaveletBasis dual_build(const WaveletBasis& basis);

DiskPolynomial dual_reconstruct(const Eigen::VectorXcd& coefficients,
                                const WaveletBasis& basis,
                                const DualWaveletBasis& duals);

// Pointwise-sampled frame machinery: B holds block basis values at the
// sample points, the synthesis matrix is B A*, and the discretized duals are
// the pseudo-inverse frame duals in sample space (the frame operator is
// singular on the ambient space, rank <= dimension).
struct FrameOps {
  Eigen::MatrixXcd sampled_block;   // D x dim
  Eigen::MatrixXcd synthesis;       // Psi = B A*
  Eigen::MatrixXcd frame_operator;  // Psi Psi*
  Eigen::MatrixXcd duals;           // column j = discretized dual of psi_j
  int rank = 0;
};

FrameOps discretized_frame_ops(
    const WaveletBasis& basis, const std::vector<PolarPoint>& samples,
    const std::optional<Eigen::VectorXd>& weights = std::nullopt);

}  // namespace zernlets
