#pragma once

#include <cstdint>
#include <vector>

#include "core/mra.hpp"

namespace zernlets {

// Scattered elevation samples over the closed unit disk.
struct DiskSamples {
  std::vector<PolarPoint> points;
  Eigen::VectorXd values;

  int count() const { return static_cast<int>(points.size()); }
};

// Validates lengths and radii (<= 1 + 1e-12, clamped to 1).
DiskSamples make_samples(std::vector<PolarPoint> points, Eigen::VectorXd values);

// Digest of a sample set, used to reject mixing results that came from
// different data.
uint64_t sample_fingerprint(const DiskSamples& samples);

// Least-squares fit of the samples onto the degree-N space in the real
// orthonormal basis.
struct FitResult {
  int degree = 0;
  Eigen::VectorXd coeffs;  // real-basis coefficients, length space_dim(degree)
  double residual_l2 = 0.0;
  double residual_rms = 0.0;
  double design_condition = 0.0;
  uint64_t fingerprint = 0;
  int sample_count = 0;
};

// Rows are sample points, columns the real orthonormal basis functions of
// degree <= N.  Requires count >= space_dim(N).
Eigen::MatrixXd design_matrix(const DiskSamples& samples, int degree);

// Complex-basis variant (column j is Z_j at the sample points).
Eigen::MatrixXcd design_matrix_complex(const DiskSamples& samples, int degree);

// Solves min ||B a - values|| by column-pivoted QR.  Throws numeric_error
// when the design matrix condition number reaches 1e12.
FitResult least_squares_fit(const DiskSamples& samples, int degree);

// Evaluates the fitted expansion at a point.
double fit_eval(const FitResult& fit, const PolarPoint& pt);

// Half-degree component obtained by truncating the degree-N fit (projection
// mode).  Residual statistics are recomputed against the samples.
FitResult project_fit(const FitResult& fit, const DiskSamples& samples);

// Difference between a degree-N fit and a degree-N/2 fit of the same samples,
// as a complex polynomial in V_N.  With the projection-mode low fit the
// difference is supported on indices space_dim(N/2) .. space_dim(N)-1.
DiskPolynomial fit_difference(const FitResult& high, const FitResult& low);

// Multiscale analysis of a fitted expansion.
Decomposition wavelet_analysis(const FitResult& fit, const MultiscaleBasis& basis);

// Algebraic best-fit sphere and per-sample difference map.
struct SphereFit {
  double x0 = 0.0, y0 = 0.0, z0 = 0.0;
  double radius = 0.0;
  Eigen::VectorXd sphere_height;  // sphere surface at each sample point
  Eigen::VectorXd difference;     // values - sphere_height
};

// Linear least squares on x^2+y^2+z^2 = 2*x0*x + 2*y0*y + 2*z0*z + c.
// Throws numeric_error for degenerate (e.g. coplanar) data.
SphereFit best_fit_sphere(const DiskSamples& samples);

// Height of the fitted sphere above the disk point (branch chosen toward the
// data side); used for difference-map grids.
double sphere_height_at(const SphereFit& sphere, const PolarPoint& pt);

}  // namespace zernlets
