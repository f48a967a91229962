#include "core/fit.hpp"

#include <cmath>
#include <cstring>
#include <limits>

#include "core/parallel.hpp"
#include "core/zernike.hpp"

namespace zernlets {

namespace {

constexpr double kConditionGate = 1e12;

uint64_t fnv1a(uint64_t hash, double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  for (int b = 0; b < 8; ++b) {
    hash ^= (bits >> (8 * b)) & 0xffu;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

double condition_number(const Eigen::MatrixXd& m) {
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  const double smin = sv[sv.size() - 1];
  return smin > 0.0 ? sv[0] / smin : std::numeric_limits<double>::infinity();
}

}  // namespace

DiskSamples make_samples(std::vector<PolarPoint> points, Eigen::VectorXd values) {
  if (static_cast<int>(points.size()) != values.size())
    throw std::invalid_argument("make_samples: points/values length mismatch");
  if (points.empty()) throw std::invalid_argument("make_samples: empty sample set");
  for (auto& p : points) {
    if (!std::isfinite(p.rho) || !std::isfinite(p.theta) || p.rho < 0.0)
      throw std::invalid_argument("make_samples: bad polar coordinate");
    if (p.rho > 1.0 + 1e-12)
      throw std::invalid_argument("make_samples: sample radius exceeds the unit disk");
    p.rho = std::min(p.rho, 1.0);
  }
  if (!values.allFinite())
    throw std::invalid_argument("make_samples: non-finite elevation value");
  return {std::move(points), std::move(values)};
}

uint64_t sample_fingerprint(const DiskSamples& samples) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (int i = 0; i < samples.count(); ++i) {
    h = fnv1a(h, samples.points[i].rho);
    h = fnv1a(h, samples.points[i].theta);
    h = fnv1a(h, samples.values[i]);
  }
  return h;
}

Eigen::MatrixXd design_matrix(const DiskSamples& samples, int degree) {
  const int width = space_dim(degree);
  if (samples.count() < width)
    throw std::invalid_argument("design_matrix: fewer samples than basis functions");
  Eigen::MatrixXd b(samples.count(), width);
  parallel_for(samples.count(), [&](int i) {
    b.row(i) = real_basis_row(degree, samples.points[i]).transpose();
  });
  return b;
}

Eigen::MatrixXcd design_matrix_complex(const DiskSamples& samples, int degree) {
  const int width = space_dim(degree);
  if (samples.count() < width)
    throw std::invalid_argument("design_matrix: fewer samples than basis functions");
  Eigen::MatrixXcd b(samples.count(), width);
  parallel_for(samples.count(), [&](int i) {
    b.row(i) = basis_row(degree, samples.points[i]).transpose();
  });
  return b;
}

FitResult least_squares_fit(const DiskSamples& samples, int degree) {
  const Eigen::MatrixXd b = design_matrix(samples, degree);
  FitResult fit;
  fit.degree = degree;
  fit.design_condition = condition_number(b);
  if (!(fit.design_condition < kConditionGate))
    throw numeric_error("least_squares_fit: design matrix condition " +
                        std::to_string(fit.design_condition));
  fit.coeffs = Eigen::ColPivHouseholderQR<Eigen::MatrixXd>(b).solve(samples.values);
  const Eigen::VectorXd residual = samples.values - b * fit.coeffs;
  fit.residual_l2 = residual.norm();
  fit.residual_rms = fit.residual_l2 / std::sqrt(double(samples.count()));
  fit.fingerprint = sample_fingerprint(samples);
  fit.sample_count = samples.count();
  return fit;
}

double fit_eval(const FitResult& fit, const PolarPoint& pt) {
  return real_basis_row(fit.degree, pt).dot(fit.coeffs);
}

FitResult project_fit(const FitResult& fit, const DiskSamples& samples) {
  if (sample_fingerprint(samples) != fit.fingerprint)
    throw std::invalid_argument("project_fit: samples do not match the fit");
  if (fit.degree % 2 != 0)
    throw std::invalid_argument("project_fit: degree must be even");
  const int half = fit.degree / 2;
  FitResult low;
  low.degree = half;
  low.coeffs = fit.coeffs.head(space_dim(half));
  const Eigen::MatrixXd b = design_matrix(samples, half);
  low.design_condition = condition_number(b);
  const Eigen::VectorXd residual = samples.values - b * low.coeffs;
  low.residual_l2 = residual.norm();
  low.residual_rms = low.residual_l2 / std::sqrt(double(samples.count()));
  low.fingerprint = fit.fingerprint;
  low.sample_count = fit.sample_count;
  return low;
}

DiskPolynomial fit_difference(const FitResult& high, const FitResult& low) {
  if (low.degree * 2 != high.degree)
    throw std::invalid_argument("fit_difference: degrees must be N and N/2");
  if (low.fingerprint != high.fingerprint)
    throw std::invalid_argument("fit_difference: fits come from different samples");
  Eigen::VectorXd diff = high.coeffs;
  diff.head(low.coeffs.size()) -= low.coeffs;
  DiskPolynomial p;
  p.max_degree = high.degree;
  p.coeffs = real_basis_to_complex(diff);
  return p;
}

Decomposition wavelet_analysis(const FitResult& fit, const MultiscaleBasis& basis) {
  if (fit.degree != basis.ladder.top_degree)
    throw std::invalid_argument("wavelet_analysis: fit degree differs from ladder degree");
  DiskPolynomial p;
  p.max_degree = fit.degree;
  p.coeffs = real_basis_to_complex(fit.coeffs);
  return decompose(p, basis);
}

SphereFit best_fit_sphere(const DiskSamples& samples) {
  const int n = samples.count();
  if (n < 4) throw std::invalid_argument("best_fit_sphere: at least 4 points required");
  Eigen::MatrixXd a(n, 4);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    const double x = polar_x(samples.points[i]);
    const double y = polar_y(samples.points[i]);
    const double z = samples.values[i];
    a.row(i) << 2.0 * x, 2.0 * y, 2.0 * z, 1.0;
    rhs[i] = x * x + y * y + z * z;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < 4)
    throw numeric_error("best_fit_sphere: degenerate (coplanar) sample geometry");
  const Eigen::Vector4d sol = qr.solve(rhs);

  SphereFit sphere;
  sphere.x0 = sol[0];
  sphere.y0 = sol[1];
  sphere.z0 = sol[2];
  const double r2 = sol[3] + sol[0] * sol[0] + sol[1] * sol[1] + sol[2] * sol[2];
  if (!(r2 > 0.0)) throw numeric_error("best_fit_sphere: non-positive squared radius");
  sphere.radius = std::sqrt(r2);

  // Pick the hemisphere facing the data.
  const double mean_z = samples.values.mean();
  const double side = mean_z >= sphere.z0 ? 1.0 : -1.0;
  sphere.sphere_height.resize(n);
  for (int i = 0; i < n; ++i) {
    const double dx = polar_x(samples.points[i]) - sphere.x0;
    const double dy = polar_y(samples.points[i]) - sphere.y0;
    const double rad = std::max(0.0, r2 - dx * dx - dy * dy);
    sphere.sphere_height[i] = sphere.z0 + side * std::sqrt(rad);
  }
  sphere.difference = samples.values - sphere.sphere_height;
  return sphere;
}

double sphere_height_at(const SphereFit& sphere, const PolarPoint& pt) {
  const double dx = polar_x(pt) - sphere.x0;
  const double dy = polar_y(pt) - sphere.y0;
  const double r2 = sphere.radius * sphere.radius - dx * dx - dy * dy;
  // The recorded per-sample heights fix the branch: majority side.
  double side = 1.0;
  if (sphere.sphere_height.size() > 0) {
    const double mean_h = sphere.sphere_height.mean();
    side = mean_h >= sphere.z0 ? 1.0 : -1.0;
  }
  return sphere.z0 + side * std::sqrt(std::max(0.0, r2));
}

}  // namespace zernlets
