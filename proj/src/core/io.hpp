#pragma once

#include <functional>
#include <string>
#include <vector>

#include "core/fit.hpp"

namespace zernlets {

// All numeric output is printed with 17 significant digits so files are
// byte-reproducible and round-trip doubles exactly.
std::string format_double(double v);

// Point list, header `j,rho,theta`.
void write_points_csv(const std::string& path, const std::vector<PolarPoint>& points);

// Elevation samples, header `r,theta,z`.
void write_samples_csv(const std::string& path, const DiskSamples& samples);

// Accepts header `x,y,z` or `r,theta,z`.  Cartesian rows are converted to
// polar with angles in [0, 2*pi).  With normalize_radius the radii are scaled
// by the maximum radius; otherwise radii beyond the unit disk are an error.
DiskSamples ingest_samples(const std::string& path, bool normalize_radius = false);

// Fitted coefficients, header `j,n,m,A,B`: one row per mode with m >= 0
// carrying the cosine (A) and sine (B) coefficients of that mode, so the
// number of stored coefficients equals space_dim(degree) (B is identically 0
// for m = 0).  j is the single index of the (n, m) slot.
void write_coeffs_csv(const std::string& path, const FitResult& fit);

// Fit summary as JSON: degree, basis size, sample count, residual norms,
// design condition.
void write_fit_summary_json(const std::string& path, const FitResult& fit);

// Multiscale coefficients, header `level,slot,mu,omega,re,im`.  The constant
// component is the first row with level -1 and empty point fields; every
// other row carries the parameter point (mu = radius, omega = angle) of its
// wavelet function.
void write_decomposition_csv(const std::string& path, const Decomposition& d,
                             const MultiscaleBasis& basis);

// Scalar field sampled on a polar grid (res rings x 4*res angles), header
// `x,y,value`.
void write_grid_csv(const std::string& path, int res,
                    const std::function<double(const PolarPoint&)>& field);

}  // namespace zernlets
