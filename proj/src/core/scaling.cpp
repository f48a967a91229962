#include "core/scaling.hpp"

#include <cmath>

namespace zernlets {

ScalingBasis scaling_build(int N, const RadiiProvider& radii) {
  ScalingBasis basis;
  basis.degree = N;
  basis.points = regular_points(N, radii);
  const int J = space_dim(N);
  basis.collocation.resize(J, J);
  basis.functions.reserve(J);
  for (int i = 0; i < J; ++i) {
    const PolarPoint p = basis.points.points[i];
    basis.collocation.row(i) = basis_row(N, p).transpose();
    basis.functions.push_back(kernel_build(N, p));
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(basis.collocation);
  const auto& sv = svd.singularValues();
  basis.condition = sv(0) / sv(sv.size() - 1);
  if (!(basis.condition < 1e12))
    throw numeric_error("collocation matrix ill-conditioned (cond = " +
                        std::to_string(basis.condition) +
                        "); points are not usable as interpolation nodes");
  return basis;
}

LagrangeDual lagrange_dual(const ScalingBasis& basis) {
  const int J = space_dim(basis.degree);
  // l_i(P_k) = delta_ik reads A C^T = I with A the collocation matrix.
  const Eigen::MatrixXcd ct =
      Eigen::PartialPivLU<Eigen::MatrixXcd>(basis.collocation)
          .solve(Eigen::MatrixXcd::Identity(J, J));
  return {basis.degree, ct.transpose()};
}

complexd modified_orthogonality_check(const ScalingBasis& basis,
                                      const DiskPolynomial& q, int j) {
  const PolarPoint pj = basis.points.points.at(j);
  const complexd zj = std::polar(pj.rho, pj.theta);
  const DiskPolynomial shifted =
      subtract(multiply_z(q), scale(embed(q, q.max_degree + 1), zj));
  return inner_product(basis.functions[j].poly, shifted);
}

double scaling_cd_eval(const ScalingBasis& basis, int j, PolarPoint pt,
                       double eps_cd) {
  const PolarPoint anchor = basis.points.points.at(j);
  if (basis.degree < 1) return kernel_eval_direct(basis.degree, anchor, pt);
  return kernel_eval_cd(basis.degree, anchor, pt, eps_cd);
}

OrthogonalityReport orthogonality_equivalence_check(const ScalingBasis& basis,
                                                    double tol) {
  const int J = space_dim(basis.degree);
  OrthogonalityReport report;
  report.d.resize(J);
  double gram_off = 0.0, point_off = 0.0;
  for (int i = 0; i < J; ++i) {
    report.d[i] = kernel_self_value(basis.degree, basis.points.points[i]);
    for (int k = 0; k < J; ++k) {
      if (i == k) continue;
      const double gram =
          std::abs(inner_product(basis.functions[i].poly,
                                 basis.functions[k].poly));
      const double point = std::abs(kernel_eval_direct(
          basis.degree, basis.points.points[i], basis.points.points[k]));
      gram_off = std::max(gram_off, gram);
      point_off = std::max(point_off, point);
    }
  }
  report.max_off_diagonal = gram_off;
  report.gram_diagonal = gram_off <= tol;
  report.pointwise_delta = point_off <= tol;
  report.consistent = report.gram_diagonal == report.pointwise_delta;
  return report;
}

}  // namespace zernlets
