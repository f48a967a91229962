#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zernlets {

using complexd = std::complex<double>;

class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Point in polar coordinates on the closed unit disk.
struct PolarPoint {
  double rho = 0.0;
  double theta = 0.0;
};

// Angle is wrapped into [0, 2*pi).
inline PolarPoint polar_from_xy(double x, double y) {
  double theta = std::atan2(y, x);
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  return {std::hypot(x, y), theta};
}

inline double polar_x(const PolarPoint& p) { return p.rho * std::cos(p.theta); }
inline double polar_y(const PolarPoint& p) { return p.rho * std::sin(p.theta); }

// Dimension of the polynomial space of total degree <= N on the disk.
constexpr int space_dim(int degree) { return (degree + 1) * (degree + 2) / 2; }

// The detail space at level N sits between degree N and degree 2N (between
// degrees 0 and 1 for N = 0, where the quotient would be empty).
constexpr int wavelet_upper_degree(int level) {
  return level == 0 ? 1 : 2 * level;
}
constexpr int wavelet_dim(int level) {
  return level == 0 ? 2 : 3 * level * (level + 1) / 2;
}
// Half-open single-index range [lo, hi) owned by the level.
struct IndexBlock {
  int lo = 0;
  int hi = 0;
  int width() const { return hi - lo; }
};
constexpr IndexBlock wavelet_block(int level) {
  return {space_dim(level), space_dim(wavelet_upper_degree(level))};
}

// Polynomial on the disk stored as coefficients against the orthonormal
// complex basis, in single-index order.  coeffs.size() == space_dim(max_degree).
struct DiskPolynomial {
  int max_degree = 0;
  Eigen::VectorXcd coeffs;

  static DiskPolynomial zero(int degree) {
    DiskPolynomial p;
    p.max_degree = degree;
    p.coeffs = Eigen::VectorXcd::Zero(space_dim(degree));
    return p;
  }
};

// Re-express against the basis of a higher (or equal) degree.
DiskPolynomial embed(const DiskPolynomial& p, int degree);

DiskPolynomial add(const DiskPolynomial& a, const DiskPolynomial& b);
DiskPolynomial subtract(const DiskPolynomial& a, const DiskPolynomial& b);
DiskPolynomial scale(const DiskPolynomial& a, complexd factor);

}  // namespace zernlets
