#pragma once

#include <cstdint>

#include "core/fit.hpp"

namespace zernlets {

enum class SurfaceKind { Normal, Astigmatism, Keratoconus };

// Synthetic corneal-like elevation surfaces over the unit disk (disk units;
// heights in the same arbitrary length unit as the inputs they stand in for).
//   Normal:       spherical cap sqrt(cap_radius^2 - r^2)
//   Astigmatism:  cap + astig_amplitude * r^2 * cos(2*theta - 2*astig_axis)
//   Keratoconus:  cap + bump_amplitude * exp(-d^2 / (2*bump_sigma^2)), where d
//                 is the planar distance to the bump center
struct SynthParams {
  double cap_radius = 2.0;
  double astig_amplitude = 0.05;
  double astig_axis = 0.0;
  double bump_amplitude = 0.1;
  double bump_sigma = 0.12;
  // Default cone sits in the ring region where the multiscale parameter
  // points cluster, so detail coefficients can register it.
  double bump_rho = 0.70;
  double bump_theta = 0.6981317007977318;  // 2*pi/9
};

// Exact surface height at a point (no noise).
double synth_height(SurfaceKind kind, const SynthParams& params, const PolarPoint& pt);

// Draws `count` points uniformly over the disk and evaluates the surface,
// adding i.i.d. Gaussian noise of standard deviation noise_sigma.
// Deterministic for a fixed seed.
DiskSamples synth_surface(SurfaceKind kind, const SynthParams& params,
                          double noise_sigma, uint64_t seed, int count = 10200);

}  // namespace zernlets
