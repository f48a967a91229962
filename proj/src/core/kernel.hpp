#pragma once

#include "core/zernike.hpp"

namespace zernlets {

// Reproducing kernel of V_N anchored at a point: coefficients
// c_j = conj(Z_j(anchor)), so <p, K(.;anchor)> = p(anchor) for p in V_N.
struct KernelFunction {
  int degree = 0;
  PolarPoint anchor;
  DiskPolynomial poly;
};

KernelFunction kernel_build(int N, PolarPoint anchor);

// K_N(anchor; anchor) = sum over the basis of gamma^2 R^2 >= 1/pi.
double kernel_self_value(int N, PolarPoint anchor);

double kernel_eval_direct(int N, PolarPoint anchor, PolarPoint pt);

// Christoffel-Darboux form: two boundary-degree sums divided by r^2 - rho^2,
// falling back to the direct sum inside the singular stripe.
double kernel_eval_cd(int N, PolarPoint anchor, PolarPoint pt,
                      double eps_cd = 1e-6);

// Coefficient b_N^m from the recurrence-degree term of the CD formula.
double cd_b_coeff(int N, int m);

// Minimum L2 norm over {p in V_N : p(anchor) = 1}; attained by
// K_N(.;anchor)/K_N(anchor;anchor).
double localization_ratio(int N, PolarPoint anchor);

}  // namespace zernlets
