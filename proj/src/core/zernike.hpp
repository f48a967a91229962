#pragma once

#include <utility>
#include <vector>

#include "core/types.hpp"

namespace zernlets {

// (n, m) with n >= 0, |m| <= n, n - |m| even.
struct ZernikeIndex {
  int n = 0;
  int m = 0;
};

bool index_valid(int n, int m);

// Single index j = (n(n+2) + m) / 2; bijective onto 0,1,2,...
int index_pack(int n, int m);
ZernikeIndex index_unpack(int j);

// Radial polynomial R_n^{|m|}(r).  Coefficients are exact integers; they are
// generated by ratio updates from the leading binomial rather than from
// factorial quotients, then evaluated as a polynomial in r^2 times r^{|m|}.
double radial_eval(int n, int m, double r);

// Coefficients c_s of R_n^{|m|}(r) = sum_s c_s r^{n-2s}, s = 0..(n-|m|)/2.
std::vector<double> radial_coefficients(int n, int m);

// Orthonormal complex basis element:  gamma_n^m R_n^{|m|}(rho) e^{i m theta}
// with gamma_n^m = sqrt((n+1)/pi).
complexd zernike_eval(ZernikeIndex idx, PolarPoint p);
double zernike_norm_constant(int n);

// Orthonormal real basis element: sqrt((n+1)/pi) R_n^0 for m = 0, and
// sqrt(2(n+1)/pi) R_n^{|m|} times cos(m theta) for m > 0, sin(|m| theta)
// for m < 0.
double zernike_real_eval(ZernikeIndex idx, PolarPoint p);
double zernike_real_norm_constant(int n, int m);

// All basis values at one point, in single-index order (length space_dim(N)).
Eigen::VectorXcd basis_row(int degree, PolarPoint p);
Eigen::VectorXd real_basis_row(int degree, PolarPoint p);

// Evaluate a polynomial given by complex-basis coefficients.
complexd eval_poly(const DiskPolynomial& p, PolarPoint pt);

// L2 inner product <p, q> = integral p conj(q) over the disk, computed
// exactly from the coefficient vectors (the basis is orthonormal).
complexd inner_product(const DiskPolynomial& p, const DiskPolynomial& q);
double norm_l2(const DiskPolynomial& p);

// Largest coefficient magnitude outside the real-valuedness constraint
// c_{n,-m} = conj(c_{n,m}); zero for real-valued polynomials.
double real_valued_defect(const DiskPolynomial& p);

// Three-term recurrence in the radial degree at fixed m:
//   r^2 Z_n^m = b_{n-2}^m Z_{n-2}^m + a_n^m Z_n^m + b_n^m Z_{n+2}^m.
double three_term_a(int n, int m);
double three_term_b(int n, int m);

// b_{n-2} z_lower + a_n z_center + b_n z_upper; terms whose (degree, m) pair
// is invalid contribute zero, whatever value is passed for them.
complexd three_term_apply(int n, int m, complexd z_lower, complexd z_center,
                          complexd z_upper);

// Multiplication by r^2 as an operator on coefficient vectors; the result
// lives two degrees higher.
DiskPolynomial multiply_r2(const DiskPolynomial& p);

// Multiplication by the complex coordinate z = r e^{i theta}; degree + 1.
DiskPolynomial multiply_z(const DiskPolynomial& p);

// Real coefficient sheet for a real-valued polynomial: one row per (n, m)
// with m >= 0, A = c_{n,m} + c_{n,-m} and B = i (c_{n,m} - c_{n,-m}).
// For m = 0 the same formulas are applied with both terms equal (A = 2 c_{n,0},
// B = 0), so the round trip c = (A - iB)/2, c' = (A + iB)/2 is exact.
struct RealCoeffRow {
  int n = 0;
  int m = 0;
  double A = 0.0;
  double B = 0.0;
};

struct RealCoeffs {
  int max_degree = 0;
  std::vector<RealCoeffRow> rows;  // ordered by (n, m)
};

RealCoeffs complex_to_real_coeffs(const DiskPolynomial& p, double tol = 1e-10);
DiskPolynomial real_to_complex_coeffs(const RealCoeffs& rc);

// Coefficients against the orthonormal real basis (same single-index layout,
// slot j = (n, m) holding the cos branch for m >= 0 and sin for m < 0).
Eigen::VectorXd complex_to_real_basis(const Eigen::VectorXcd& c, double tol = 1e-10);
Eigen::VectorXcd real_basis_to_complex(const Eigen::VectorXd& g);

// Expansion into monomials x^a y^b; entry (a, b) of the returned matrix is
// the coefficient of x^a y^b.  Used for substitution-based set inclusion
// checks, where polar coordinates are unusable.
Eigen::MatrixXcd monomial_coeffs(ZernikeIndex idx);
Eigen::MatrixXcd to_monomials(const DiskPolynomial& p);
complexd eval_monomials(const Eigen::MatrixXcd& mono, double x, double y);

}  // namespace zernlets
