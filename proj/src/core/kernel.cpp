#include "core/kernel.hpp"

#include <cmath>

namespace zernlets {

KernelFunction kernel_build(int N, PolarPoint anchor) {
  if (N < 0) throw std::invalid_argument("kernel degree must be >= 0");
  KernelFunction k;
  k.degree = N;
  k.anchor = anchor;
  k.poly.max_degree = N;
  k.poly.coeffs = basis_row(N, anchor).conjugate();
  return k;
}

double kernel_self_value(int N, PolarPoint anchor) {
  return basis_row(N, anchor).squaredNorm();
}

double kernel_eval_direct(int N, PolarPoint anchor, PolarPoint pt) {
  // sum_j conj(Z_j(anchor)) Z_j(pt); Eigen dot conjugates its first operand.
  return basis_row(N, anchor).dot(basis_row(N, pt)).real();
}

double cd_b_coeff(int N, int m) {
  return ((double)(N + 2) * (N + 2) - (double)m * m) / (4.0 * (N + 2)) /
         std::sqrt((double)(N + 1) * (N + 3));
}

namespace {

complexd z_or_zero(int n, int m, PolarPoint p) {
  if (!index_valid(n, m)) return 0.0;
  return zernike_eval({n, m}, p);
}

// One boundary sum of the CD numerator at degree n:
// sum_m b_n^m [Z_{n+2}^m(pt) conj(Z_n^m(anchor)) - Z_n^m(pt) conj(Z_{n+2}^m(anchor))]
complexd cd_boundary_sum(int n, PolarPoint anchor, PolarPoint pt) {
  complexd acc = 0.0;
  for (int m = -n; m <= n; ++m) {
    if (!index_valid(n, m)) continue;
    const double b = cd_b_coeff(n, m);
    acc += b * (z_or_zero(n + 2, m, pt) * std::conj(z_or_zero(n, m, anchor)) -
                z_or_zero(n, m, pt) * std::conj(z_or_zero(n + 2, m, anchor)));
  }
  return acc;
}

}  // namespace

double kernel_eval_cd(int N, PolarPoint anchor, PolarPoint pt, double eps_cd) {
  if (N < 1) throw std::invalid_argument("CD form needs N >= 1");
  const double denom = pt.rho * pt.rho - anchor.rho * anchor.rho;
  if (std::abs(denom) < eps_cd) return kernel_eval_direct(N, anchor, pt);
  const complexd num =
      cd_boundary_sum(N, anchor, pt) + cd_boundary_sum(N - 1, anchor, pt);
  return (num / denom).real();
}

double localization_ratio(int N, PolarPoint anchor) {
  const double self = kernel_self_value(N, anchor);
  if (self <= 0.0) throw numeric_error("kernel self value must be positive");
  return 1.0 / std::sqrt(self);
}

}  // namespace zernlets
