#include "zernlets/zernlets.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "core/io.hpp"
#include "core/synth.hpp"
#include "core/validate.hpp"

struct zl_samples {
  zernlets::DiskSamples data;
};

struct zl_fit {
  zernlets::FitResult data;
};

struct zl_decomposition {
  zernlets::FitResult fit;
  zernlets::MultiscaleBasis basis;
  zernlets::Decomposition data;
  zernlets::DiskPolynomial recon;
};

struct zl_validation {
  zernlets::ValidationReport data;
};

namespace {

thread_local std::string g_last_error;

zl_status fail(zl_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
zl_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const zernlets::io_error& e) {
    return fail(ZL_IO_ERROR, e.what());
  } catch (const zernlets::numeric_error& e) {
    return fail(ZL_NUMERIC_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ZL_BAD_ARGUMENT, e.what());
  } catch (const std::logic_error& e) {
    return fail(ZL_BAD_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ZL_INTERNAL_ERROR, e.what());
  }
}

zl_status require(bool ok, const char* what) {
  if (!ok) return fail(ZL_BAD_ARGUMENT, what);
  g_last_error.clear();
  return ZL_OK;
}

zernlets::SynthParams to_core(const zl_synth_params& p) {
  zernlets::SynthParams core;
  core.cap_radius = p.cap_radius;
  core.astig_amplitude = p.astig_amplitude;
  core.astig_axis = p.astig_axis;
  core.bump_amplitude = p.bump_amplitude;
  core.bump_sigma = p.bump_sigma;
  core.bump_rho = p.bump_rho;
  core.bump_theta = p.bump_theta;
  return core;
}

zl_status check_strategy(zl_point_strategy strategy) {
  return require(strategy == ZL_POINTS_FEKETE || strategy == ZL_POINTS_RANDOM,
                 "unknown point strategy");
}

zernlets::PointStrategy to_core(zl_point_strategy strategy) {
  return strategy == ZL_POINTS_FEKETE ? zernlets::PointStrategy::Fekete
                                      : zernlets::PointStrategy::Random;
}

}  // namespace

const char* zl_version(void) { return "0.1.0"; }

const char* zl_last_error(void) { return g_last_error.c_str(); }

void zl_synth_params_default(zl_synth_params* params) {
  if (!params) return;
  const zernlets::SynthParams d;
  params->cap_radius = d.cap_radius;
  params->astig_amplitude = d.astig_amplitude;
  params->astig_axis = d.astig_axis;
  params->bump_amplitude = d.bump_amplitude;
  params->bump_sigma = d.bump_sigma;
  params->bump_rho = d.bump_rho;
  params->bump_theta = d.bump_theta;
  params->noise_sigma = 0.0;
}

zl_status zl_synth_samples(zl_surface_kind kind, const zl_synth_params* params,
                           uint64_t seed, int count, zl_samples** out) {
  if (auto s = require(out != nullptr, "out is NULL")) return s;
  if (auto s = require(kind == ZL_SURFACE_NORMAL || kind == ZL_SURFACE_ASTIGMATISM ||
                           kind == ZL_SURFACE_KERATOCONUS,
                       "unknown surface kind"))
    return s;
  return guarded([&] {
    zl_synth_params defaults;
    zl_synth_params_default(&defaults);
    const zl_synth_params& p = params ? *params : defaults;
    const auto core_kind = static_cast<zernlets::SurfaceKind>(kind);
    auto samples =
        zernlets::synth_surface(core_kind, to_core(p), p.noise_sigma, seed, count);
    *out = new zl_samples{std::move(samples)};
    return ZL_OK;
  });
}

zl_status zl_samples_read(const char* path, int normalize, zl_samples** out) {
  if (auto s = require(path && out, "path/out is NULL")) return s;
  return guarded([&] {
    *out = new zl_samples{zernlets::ingest_samples(path, normalize != 0)};
    return ZL_OK;
  });
}

zl_status zl_samples_write(const zl_samples* samples, const char* path) {
  if (auto s = require(samples && path, "samples/path is NULL")) return s;
  return guarded([&] {
    zernlets::write_samples_csv(path, samples->data);
    return ZL_OK;
  });
}

zl_status zl_samples_count(const zl_samples* samples, int* out) {
  if (auto s = require(samples && out, "samples/out is NULL")) return s;
  *out = samples->data.count();
  return ZL_OK;
}

zl_status zl_samples_subtract_sphere(const zl_samples* samples, zl_samples** out) {
  if (auto s = require(samples && out, "samples/out is NULL")) return s;
  return guarded([&] {
    const auto sphere = zernlets::best_fit_sphere(samples->data);
    Eigen::VectorXd values(samples->data.count());
    for (int i = 0; i < samples->data.count(); ++i)
      values[i] = samples->data.values[i] -
                  zernlets::sphere_height_at(sphere, samples->data.points[i]);
    *out = new zl_samples{
        zernlets::make_samples(samples->data.points, std::move(values))};
    return ZL_OK;
  });
}

void zl_samples_free(zl_samples* samples) { delete samples; }

zl_status zl_write_regular_points(int degree, const char* path) {
  if (auto s = require(path != nullptr, "path is NULL")) return s;
  return guarded([&] {
    zernlets::write_points_csv(path, zernlets::regular_points(degree).points);
    return ZL_OK;
  });
}

zl_status zl_write_wavelet_points(int level, zl_point_strategy strategy,
                                  uint64_t seed, const char* path) {
  if (auto s = require(path != nullptr, "path is NULL")) return s;
  if (auto s = check_strategy(strategy)) return s;
  return guarded([&] {
    const auto set =
        zernlets::wavelet_parameter_points(level, to_core(strategy), seed);
    zernlets::write_points_csv(path, set.points);
    return ZL_OK;
  });
}

zl_status zl_fit_samples(const zl_samples* samples, int degree, zl_fit** out) {
  if (auto s = require(samples && out, "samples/out is NULL")) return s;
  return guarded([&] {
    *out = new zl_fit{zernlets::least_squares_fit(samples->data, degree)};
    return ZL_OK;
  });
}

zl_status zl_fit_degree(const zl_fit* fit, int* out) {
  if (auto s = require(fit && out, "fit/out is NULL")) return s;
  *out = fit->data.degree;
  return ZL_OK;
}

zl_status zl_fit_stats(const zl_fit* fit, double* residual_l2,
                       double* residual_rms, double* condition) {
  if (auto s = require(fit != nullptr, "fit is NULL")) return s;
  if (residual_l2) *residual_l2 = fit->data.residual_l2;
  if (residual_rms) *residual_rms = fit->data.residual_rms;
  if (condition) *condition = fit->data.design_condition;
  return ZL_OK;
}

zl_status zl_fit_write_coeffs(const zl_fit* fit, const char* path) {
  if (auto s = require(fit && path, "fit/path is NULL")) return s;
  return guarded([&] {
    zernlets::write_coeffs_csv(path, fit->data);
    return ZL_OK;
  });
}

zl_status zl_fit_write_summary(const zl_fit* fit, const char* path) {
  if (auto s = require(fit && path, "fit/path is NULL")) return s;
  return guarded([&] {
    zernlets::write_fit_summary_json(path, fit->data);
    return ZL_OK;
  });
}

zl_status zl_fit_write_difference_grid(const zl_fit* fit, const zl_samples* samples,
                                       int res, const char* path) {
  if (auto s = require(fit && samples && path, "fit/samples/path is NULL")) return s;
  return guarded([&] {
    if (zernlets::sample_fingerprint(samples->data) != fit->data.fingerprint)
      throw std::invalid_argument("samples do not match the fitted set");
    const auto sphere = zernlets::best_fit_sphere(samples->data);
    zernlets::write_grid_csv(path, res, [&](const zernlets::PolarPoint& p) {
      return zernlets::fit_eval(fit->data, p) - zernlets::sphere_height_at(sphere, p);
    });
    return ZL_OK;
  });
}

void zl_fit_free(zl_fit* fit) { delete fit; }

zl_status zl_decompose(const zl_fit* fit, zl_point_strategy strategy, uint64_t seed,
                       zl_decomposition** out) {
  if (auto s = require(fit && out, "fit/out is NULL")) return s;
  if (auto s = check_strategy(strategy)) return s;
  return guarded([&] {
    auto handle = std::make_unique<zl_decomposition>();
    handle->fit = fit->data;
    handle->basis =
        zernlets::multiscale_build(fit->data.degree, to_core(strategy), seed);
    handle->data = zernlets::wavelet_analysis(fit->data, handle->basis);
    handle->recon = zernlets::reconstruct(handle->data, handle->basis);
    *out = handle.release();
    return ZL_OK;
  });
}

zl_status zl_decomposition_v0(const zl_decomposition* d, double* out) {
  if (auto s = require(d && out, "decomposition/out is NULL")) return s;
  *out = d->data.v0.real();
  return ZL_OK;
}

zl_status zl_decomposition_level_count(const zl_decomposition* d, int* out) {
  if (auto s = require(d && out, "decomposition/out is NULL")) return s;
  *out = static_cast<int>(d->data.levels.size());
  return ZL_OK;
}

zl_status zl_decomposition_level_info(const zl_decomposition* d, int index,
                                      int* level, int* dimension, double* energy) {
  if (auto s = require(d != nullptr, "decomposition is NULL")) return s;
  if (auto s = require(index >= 0 && index < static_cast<int>(d->data.levels.size()),
                       "level index out of range"))
    return s;
  if (level) *level = d->data.levels[index];
  if (dimension) *dimension = static_cast<int>(d->data.coefficients[index].size());
  if (energy) *energy = d->data.coefficients[index].squaredNorm();
  return ZL_OK;
}

zl_status zl_decomposition_top_coefficients(const zl_decomposition* d, int k,
                                            int* levels, double* mu, double* omega,
                                            double* magnitude, int* written) {
  if (auto s = require(d != nullptr, "decomposition is NULL")) return s;
  if (auto s = require(k >= 0, "k must be non-negative")) return s;
  struct Entry {
    int level;
    zernlets::PolarPoint point;
    double magnitude;
  };
  std::vector<Entry> entries;
  for (size_t li = 0; li < d->data.levels.size(); ++li) {
    const auto& coeffs = d->data.coefficients[li];
    const auto& points = d->basis.bases[li].parameters.points;
    for (int j = 0; j < coeffs.size(); ++j)
      entries.push_back({d->data.levels[li], points[j], std::abs(coeffs[j])});
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) {
                     return a.magnitude > b.magnitude;
                   });
  const int n = std::min<int>(k, static_cast<int>(entries.size()));
  for (int i = 0; i < n; ++i) {
    if (levels) levels[i] = entries[i].level;
    if (mu) mu[i] = entries[i].point.rho;
    if (omega) omega[i] = entries[i].point.theta;
    if (magnitude) magnitude[i] = entries[i].magnitude;
  }
  if (written) *written = n;
  return ZL_OK;
}

zl_status zl_decomposition_residuals(const zl_decomposition* d,
                                     const zl_samples* samples, double* zernike_l2,
                                     double* wavelet_l2) {
  if (auto s = require(d && samples, "decomposition/samples is NULL")) return s;
  return guarded([&] {
    if (zernlets::sample_fingerprint(samples->data) != d->fit.fingerprint)
      throw std::invalid_argument("samples do not match the fitted set");
    double direct = 0.0, multi = 0.0;
    for (int i = 0; i < samples->data.count(); ++i) {
      const auto& pt = samples->data.points[i];
      const double z = samples->data.values[i];
      const double fz = zernlets::fit_eval(d->fit, pt);
      const double wz = zernlets::eval_poly(d->recon, pt).real();
      direct += (z - fz) * (z - fz);
      multi += (z - wz) * (z - wz);
    }
    if (zernike_l2) *zernike_l2 = std::sqrt(direct);
    if (wavelet_l2) *wavelet_l2 = std::sqrt(multi);
    return ZL_OK;
  });
}

zl_status zl_decomposition_write(const zl_decomposition* d, const char* path) {
  if (auto s = require(d && path, "decomposition/path is NULL")) return s;
  return guarded([&] {
    zernlets::write_decomposition_csv(path, d->data, d->basis);
    return ZL_OK;
  });
}

zl_status zl_decomposition_write_recon_grid(const zl_decomposition* d, int res,
                                            const char* path) {
  if (auto s = require(d && path, "decomposition/path is NULL")) return s;
  return guarded([&] {
    zernlets::write_grid_csv(path, res, [&](const zernlets::PolarPoint& p) {
      return zernlets::eval_poly(d->recon, p).real();
    });
    return ZL_OK;
  });
}

void zl_decomposition_free(zl_decomposition* d) { delete d; }

zl_status zl_validate(int max_degree, int inject_fault, zl_validation** out) {
  if (auto s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    *out = new zl_validation{zernlets::run_validation(max_degree, inject_fault != 0)};
    return ZL_OK;
  });
}

zl_status zl_validation_passed(const zl_validation* v, int* out) {
  if (auto s = require(v && out, "validation/out is NULL")) return s;
  *out = v->data.all_passed() ? 1 : 0;
  return ZL_OK;
}

zl_status zl_validation_suite_count(const zl_validation* v, int* out) {
  if (auto s = require(v && out, "validation/out is NULL")) return s;
  *out = static_cast<int>(v->data.suites.size());
  return ZL_OK;
}

zl_status zl_validation_suite(const zl_validation* v, int index, char* name_buf,
                              size_t buf_len, double* max_error, double* tolerance,
                              int* passed) {
  if (auto s = require(v != nullptr, "validation is NULL")) return s;
  if (auto s = require(index >= 0 && index < static_cast<int>(v->data.suites.size()),
                       "suite index out of range"))
    return s;
  const auto& suite = v->data.suites[index];
  if (name_buf && buf_len > 0) {
    const size_t n = std::min(buf_len - 1, suite.name.size());
    std::memcpy(name_buf, suite.name.data(), n);
    name_buf[n] = '\0';
  }
  if (max_error) *max_error = suite.max_error;
  if (tolerance) *tolerance = suite.tolerance;
  if (passed) *passed = suite.passed ? 1 : 0;
  return ZL_OK;
}

zl_status zl_validation_write(const zl_validation* v, const char* path) {
  if (auto s = require(v && path, "validation/path is NULL")) return s;
  return guarded([&] {
    zernlets::write_validation_json(path, v->data);
    return ZL_OK;
  });
}

void zl_validation_free(zl_validation* v) { delete v; }
