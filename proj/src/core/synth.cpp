#include "core/synth.hpp"

#include <cmath>

#include "core/rng.hpp"

namespace zernlets {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_params(SurfaceKind kind, const SynthParams& p) {
  if (!(p.cap_radius >= 1.0))
    throw std::invalid_argument("synth: cap_radius must be >= 1 (disk units)");
  if (kind == SurfaceKind::Keratoconus) {
    if (!(p.bump_sigma > 0.0))
      throw std::invalid_argument("synth: bump_sigma must be positive");
    if (!(p.bump_rho >= 0.0 && p.bump_rho < 1.0))
      throw std::invalid_argument("synth: bump center must lie inside the disk");
    if (!std::isfinite(p.bump_amplitude))
      throw std::invalid_argument("synth: bump_amplitude must be finite");
  }
  if (kind == SurfaceKind::Astigmatism &&
      !(std::isfinite(p.astig_amplitude) && std::isfinite(p.astig_axis)))
    throw std::invalid_argument("synth: astigmatism parameters must be finite");
}

}  // namespace

double synth_height(SurfaceKind kind, const SynthParams& p, const PolarPoint& pt) {
  double z = std::sqrt(std::max(0.0, p.cap_radius * p.cap_radius - pt.rho * pt.rho));
  switch (kind) {
    case SurfaceKind::Normal:
      break;
    case SurfaceKind::Astigmatism:
      z += p.astig_amplitude * pt.rho * pt.rho *
           std::cos(2.0 * pt.theta - 2.0 * p.astig_axis);
      break;
    case SurfaceKind::Keratoconus: {
      const double dx = polar_x(pt) - p.bump_rho * std::cos(p.bump_theta);
      const double dy = polar_y(pt) - p.bump_rho * std::sin(p.bump_theta);
      const double d2 = dx * dx + dy * dy;
      z += p.bump_amplitude * std::exp(-d2 / (2.0 * p.bump_sigma * p.bump_sigma));
      break;
    }
  }
  return z;
}

DiskSamples synth_surface(SurfaceKind kind, const SynthParams& params,
                          double noise_sigma, uint64_t seed, int count) {
  check_params(kind, params);
  if (count <= 0) throw std::invalid_argument("synth: count must be positive");
  if (!(noise_sigma >= 0.0))
    throw std::invalid_argument("synth: noise sigma must be non-negative");

  // Points are drawn before any noise so that runs sharing a seed sample the
  // same locations regardless of the noise level.
  Rng rng(seed);
  std::vector<PolarPoint> points;
  points.reserve(count);
  Eigen::VectorXd values(count);
  for (int i = 0; i < count; ++i) {
    // Area-uniform scatter over the disk.
    const PolarPoint pt{std::sqrt(rng.uniform01()), kTwoPi * rng.uniform01()};
    values[i] = synth_height(kind, params, pt);
    points.push_back(pt);
  }
  if (noise_sigma > 0.0)
    for (int i = 0; i < count; ++i) values[i] += noise_sigma * rng.gaussian();
  return make_samples(std::move(points), std::move(values));
}

}  // namespace zernlets
