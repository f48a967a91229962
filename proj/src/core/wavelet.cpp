#include "core/wavelet.hpp"

#include <cmath>

namespace zernlets {

DiskPolynomial WaveletBasis::function(int j) const {
  DiskPolynomial p = DiskPolynomial::zero(upper_degree());
  p.coeffs.segment(block().lo, block().width()) =
      coeff_block.row(j).transpose();
  return p;
}

double WaveletBasis::eval(int j, PolarPoint pt) const {
  const IndexBlock b = block();
  return (basis_row(upper_degree(), pt).segment(b.lo, b.width()).array() *
          coeff_block.row(j).transpose().array())
      .sum()
      .real();
}

WaveletBasis wavelet_build(int level, const ParameterPointSet& params) {
  if (level < 0) throw std::invalid_argument("level must be >= 0");
  const int dim = wavelet_dim(level);
  if ((int)params.points.size() != dim)
    throw std::invalid_argument("level " + std::to_string(level) + " needs " +
                                std::to_string(dim) + " parameter points, got " +
                                std::to_string(params.points.size()));
  WaveletBasis basis;
  basis.level = level;
  basis.parameters = params;
  const IndexBlock b = basis.block();
  basis.coeff_block.resize(dim, dim);
  for (int j = 0; j < dim; ++j)
    basis.coeff_block.row(j) = basis_row(basis.upper_degree(), params.points[j])
                                   .segment(b.lo, b.width())
                                   .conjugate()
                                   .transpose();
  return basis;
}

GateResult independence_gate(const WaveletBasis& basis) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(basis.coeff_block);
  const auto& sv = svd.singularValues();
  const double smax = sv(0), smin = sv(sv.size() - 1);
  return {smin > 1e-10 * smax, smax / smin, smin};
}

Eigen::VectorXcd wavelet_coefficients(const DiskPolynomial& f,
                                      const WaveletBasis& basis) {
  const IndexBlock b = basis.block();
  Eigen::VectorXcd fb = Eigen::VectorXcd::Zero(b.width());
  const int have = (int)f.coeffs.size();
  for (int l = b.lo; l < std::min(b.hi, have); ++l) fb[l - b.lo] = f.coeffs[l];
  // <f, psi_j> = sum_l f_l conj(psi_j[l]) = (Vandermonde row j) . f_block
  return basis.vandermonde() * fb;
}

DiskPolynomial DualWaveletBasis::function(int j, IndexBlock block) const {
  const int upper = index_unpack(block.hi - 1).n;
  DiskPolynomial p = DiskPolynomial::zero(upper);
  p.coeffs.segment(block.lo, block.width()) = dual_block.row(j).transpose();
  return p;
}

DualWaveletBasis dual_build(const WaveletBasis& basis) {
  const GateResult gate = independence_gate(basis);
  if (!gate.ok || gate.smallest_singular <= 0.0)
    throw numeric_error(
        "wavelet system at level " + std::to_string(basis.level) +
        " failed the independence gate (condition " +
        std::to_string(gate.condition) + ")");
  const Eigen::MatrixXcd a = basis.vandermonde();
  const Eigen::MatrixXcd gram = a.adjoint() * a;
  // dual_j = gram^{-1} psi_j, solved rather than inverted; psi_j block
  // coefficients are the columns of A*.
  const Eigen::MatrixXcd duals =
      Eigen::PartialPivLU<Eigen::MatrixXcd>(gram).solve(a.adjoint());
  DualWaveletBasis out;
  out.level = basis.level;
  out.dual_block = duals.transpose();
  return out;
}

DiskPolynomial dual_reconstruct(const Eigen::VectorXcd& coefficients,
                                const WaveletBasis& basis,
                                const DualWaveletBasis& duals) {
  if (coefficients.size() != basis.dimension())
    throw std::invalid_argument("coefficient count mismatch");
  const IndexBlock b = basis.block();
  DiskPolynomial p = DiskPolynomial::zero(basis.upper_degree());
  p.coeffs.segment(b.lo, b.width()) =
      duals.dual_block.transpose() * coefficients;
  return p;
}

FrameOps discretized_frame_ops(const WaveletBasis& basis,
                               const std::vector<PolarPoint>& samples,
                               const std::optional<Eigen::VectorXd>& weights) {
  const int dim = basis.dimension();
  const int count = (int)samples.size();
  if (count < dim)
    throw std::invalid_argument("need at least as many samples as functions");
  if (weights && weights->size() != count)
    throw std::invalid_argument("weight count mismatch");
  const IndexBlock b = basis.block();
  FrameOps ops;
  ops.sampled_block.resize(count, b.width());
  for (int i = 0; i < count; ++i) {
    ops.sampled_block.row(i) = basis_row(basis.upper_degree(), samples[i])
                                   .segment(b.lo, b.width())
                                   .transpose();
    if (weights) ops.sampled_block.row(i) *= std::sqrt((*weights)[i]);
  }
  ops.synthesis = ops.sampled_block * basis.coeff_block.transpose();
  ops.frame_operator = ops.synthesis * ops.synthesis.adjoint();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      ops.synthesis, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  ops.rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > sv[0] * 1e-12) ++ops.rank;
  if (ops.rank < dim)
    throw numeric_error("sampled wavelet system has rank " +
                        std::to_string(ops.rank) + " < " +
                        std::to_string(dim));
  // (Psi Psi*)^+ Psi column-wise = U diag(1/s) V*.
  ops.duals = svd.matrixU() * sv.cwiseInverse().asDiagonal() *
              svd.matrixV().adjoint();
  return ops;
}

}  // namespace zernlets
