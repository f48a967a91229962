#pragma once

#include <vector>

#include "core/kernel.hpp"
#include "core/sampling.hpp"

namespace zernlets {

// Kernel functions anchored at the regular points of degree N; a localized
// basis of the degree-N space.
struct ScalingBasis {
  int degree = 0;
  RegularPointSet points;
  std::vector<KernelFunction> functions;
  // collocation(i, j) = Z_j(P_i); nonsingularity certifies the basis claim.
  Eigen::MatrixXcd collocation;
  double condition = 0.0;
};

ScalingBasis scaling_build(int N,
                           const RadiiProvider& radii = chebyshev_ring_radii);

// Lagrange interpolating polynomials for the regular points; row i of
// `coeffs` holds the basis coefficients of l_i.  These are the duals of the
// scaling functions.
struct LagrangeDual {
  int degree = 0;
  Eigen::MatrixXcd coeffs;
};

LagrangeDual lagrange_dual(const ScalingBasis& basis);

// <phi_j, q (z - z_j)> with z the complex coordinate; zero for deg q <= N-1.
complexd modified_orthogonality_check(const ScalingBasis& basis,
                                      const DiskPolynomial& q, int j);

// Evaluation of phi_j through the Christoffel-Darboux form.
double scaling_cd_eval(const ScalingBasis& basis, int j, PolarPoint pt,
                       double eps_cd = 1e-6);

// Checks that Gram diagonality and the pointwise delta condition agree
// (they are equivalent characterizations of an orthogonal scaling set).
struct OrthogonalityReport {
  bool gram_diagonal = false;
  bool pointwise_delta = false;
  bool consistent = false;
  double max_off_diagonal = 0.0;
  Eigen::VectorXd d;  // squared norms when diagonal
};

OrthogonalityReport orthogonality_equivalence_check(const ScalingBasis& basis,
                                                    double tol = 1e-10);

}  // namespace zernlets
