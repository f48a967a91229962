#include "core/mra.hpp"

#include <cmath>

#include "core/quadrature.hpp"

namespace zernlets {

MraLadder MraLadder::for_degree(int N) {
  if (N < 1 || (N & (N - 1)) != 0)
    throw std::invalid_argument("ladder degree must be a power of two");
  MraLadder ladder;
  ladder.top_degree = N;
  ladder.levels.push_back(0);
  for (int M = 1; M <= N / 2; M *= 2) ladder.levels.push_back(M);
  // The blocks must tile 1 .. J_N - 1 (index 0 is the constant component).
  int expect = 1;
  for (size_t li = 0; li < ladder.levels.size(); ++li) {
    const IndexBlock b = ladder.level_block(li);
    if (b.lo != expect) throw std::logic_error("ladder blocks do not tile");
    expect = b.hi;
  }
  if (expect != space_dim(N)) throw std::logic_error("ladder does not reach J_N");
  return ladder;
}

MultiscaleBasis multiscale_build(int N, PointStrategy strategy, uint64_t seed,
                                 const RadiiProvider& radii) {
  MultiscaleBasis out;
  out.ladder = MraLadder::for_degree(N);
  for (size_t li = 0; li < out.ladder.levels.size(); ++li) {
    const int level = out.ladder.levels[li];
    const auto params =
        wavelet_parameter_points(level, strategy, seed + level, radii);
    out.bases.push_back(wavelet_build(level, params));
    const auto gate = independence_gate(out.bases.back());
    if (!gate.ok)
      throw numeric_error("level " + std::to_string(level) +
                          " failed the independence gate (condition " +
                          std::to_string(gate.condition) + ")");
    out.duals.push_back(dual_build(out.bases.back()));
  }
  return out;
}

DiskPolynomial project_onto_VN(const DiskPolynomial& f, int N) {
  DiskPolynomial out = DiskPolynomial::zero(N);
  const Eigen::Index keep = std::min(out.coeffs.size(), f.coeffs.size());
  out.coeffs.head(keep) = f.coeffs.head(keep);
  return out;
}

Decomposition decompose(const DiskPolynomial& f, const MultiscaleBasis& basis) {
  const int N = basis.ladder.top_degree;
  const DiskPolynomial p = project_onto_VN(f, N);
  Decomposition d;
  d.top_degree = N;
  d.v0 = p.coeffs[0];
  d.levels = basis.ladder.levels;
  for (size_t li = 0; li < basis.bases.size(); ++li)
    d.coefficients.push_back(wavelet_coefficients(p, basis.bases[li]));
  return d;
}

DiskPolynomial reconstruct(const Decomposition& d, const MultiscaleBasis& basis) {
  if (d.levels != basis.ladder.levels || d.top_degree != basis.ladder.top_degree)
    throw std::invalid_argument("decomposition does not match the basis");
  DiskPolynomial out = DiskPolynomial::zero(d.top_degree);
  out.coeffs[0] = d.v0;
  for (size_t li = 0; li < basis.bases.size(); ++li) {
    const IndexBlock b = basis.ladder.level_block(li);
    const DiskPolynomial part =
        dual_reconstruct(d.coefficients[li], basis.bases[li], basis.duals[li]);
    out.coeffs.segment(b.lo, b.width()) +=
        part.coeffs.segment(b.lo, b.width());
  }
  return out;
}

bool dilation_check(const DiskPolynomial& p, double tol) {
  const int d = p.max_degree;
  // Substitute x -> x^2, y -> y^2 on the monomial expansion.
  const Eigen::MatrixXcd mono = to_monomials(p);
  Eigen::MatrixXcd sub = Eigen::MatrixXcd::Zero(2 * d + 1, 2 * d + 1);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      if (mono(a, b) != 0.0) sub(2 * a, 2 * b) = mono(a, b);

  // Expand the substituted polynomial two degrees past the claimed space and
  // demand that nothing lands above J_{2d}.
  const int probe = 2 * d + 2;
  const auto quad = DiskQuadrature::for_degree(probe);
  const auto pts = quad.grid_points();
  const auto w = quad.grid_weights();
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(space_dim(probe));
  for (size_t i = 0; i < pts.size(); ++i) {
    const complexd qv = eval_monomials(sub, polar_x(pts[i]), polar_y(pts[i]));
    c += w[(Eigen::Index)i] * qv *
         basis_row(probe, pts[i]).conjugate();
  }
  const double leak = c.tail(space_dim(probe) - space_dim(2 * d))
                          .cwiseAbs()
                          .maxCoeff();
  // The projection must also actually reproduce the substituted values.
  DiskPolynomial proj;
  proj.max_degree = probe;
  proj.coeffs = c;
  double recon_err = 0.0;
  for (int t = 0; t < 20; ++t) {
    const PolarPoint pt{std::sqrt((t + 0.5) / 20.0), 0.37 * t};
    recon_err = std::max(
        recon_err,
        std::abs(eval_poly(proj, pt) -
                 eval_monomials(sub, polar_x(pt), polar_y(pt))));
  }
  const double scale = 1.0 + c.cwiseAbs().maxCoeff();
  return leak <= tol * scale && recon_err <= tol * scale;
}

}  // namespace zernlets
