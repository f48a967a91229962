// Command-line front end.  Everything goes through the C API; diagnostics go
// to stderr so stdout stays clean for scripting.
#include <CLI11.hpp>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "zernlets/zernlets.h"

namespace {

int report(zl_status status) {
  if (status != ZL_OK) std::fprintf(stderr, "error: %s\n", zl_last_error());
  return static_cast<int>(status);
}

zl_point_strategy parse_strategy(const std::string& name) {
  return name == "random" ? ZL_POINTS_RANDOM : ZL_POINTS_FEKETE;
}

struct SamplesGuard {
  zl_samples* ptr = nullptr;
  ~SamplesGuard() { zl_samples_free(ptr); }
};

struct FitGuard {
  zl_fit* ptr = nullptr;
  ~FitGuard() { zl_fit_free(ptr); }
};

struct DecompositionGuard {
  zl_decomposition* ptr = nullptr;
  ~DecompositionGuard() { zl_decomposition_free(ptr); }
};

struct ValidationGuard {
  zl_validation* ptr = nullptr;
  ~ValidationGuard() { zl_validation_free(ptr); }
};

struct FitOptions {
  std::string input;
  std::string output;
  int degree = 8;
  bool normalize = false;
  bool subtract_sphere = false;
  int grid_res = 0;
};

int load_and_fit(const FitOptions& opt, SamplesGuard& samples, FitGuard& fit) {
  if (auto rc = report(zl_samples_read(opt.input.c_str(), opt.normalize ? 1 : 0,
                                       &samples.ptr)))
    return rc;
  if (opt.subtract_sphere) {
    SamplesGuard detail;
    if (auto rc = report(zl_samples_subtract_sphere(samples.ptr, &detail.ptr)))
      return rc;
    std::swap(samples.ptr, detail.ptr);
    std::fprintf(stderr, "best-fit sphere removed from the heights\n");
  }
  if (auto rc = report(zl_fit_samples(samples.ptr, opt.degree, &fit.ptr)))
    return rc;
  double l2 = 0.0, rms = 0.0, cond = 0.0;
  zl_fit_stats(fit.ptr, &l2, &rms, &cond);
  int count = 0;
  zl_samples_count(samples.ptr, &count);
  std::fprintf(stderr,
               "fit: degree %d, %d samples, residual l2 %.6g, rms %.6g, "
               "condition %.4g\n",
               opt.degree, count, l2, rms, cond);
  return 0;
}

int run_points(int degree, int level, const std::string& strategy, uint64_t seed,
               const std::string& output) {
  if (level >= 0)
    return report(zl_write_wavelet_points(level, parse_strategy(strategy), seed,
                                          output.c_str()));
  return report(zl_write_regular_points(degree, output.c_str()));
}

int run_synth(const std::string& kind_name, const zl_synth_params& params,
              uint64_t seed, int count, const std::string& output) {
  zl_surface_kind kind = ZL_SURFACE_NORMAL;
  if (kind_name == "astigmatism") kind = ZL_SURFACE_ASTIGMATISM;
  if (kind_name == "keratoconus") kind = ZL_SURFACE_KERATOCONUS;
  SamplesGuard samples;
  if (auto rc = report(zl_synth_samples(kind, &params, seed, count, &samples.ptr)))
    return rc;
  return report(zl_samples_write(samples.ptr, output.c_str()));
}

int run_fit(const FitOptions& opt) {
  SamplesGuard samples;
  FitGuard fit;
  if (auto rc = load_and_fit(opt, samples, fit)) return rc;
  if (auto rc = report(zl_fit_write_coeffs(fit.ptr, (opt.output + ".coeffs.csv").c_str())))
    return rc;
  if (auto rc = report(zl_fit_write_summary(fit.ptr, (opt.output + ".summary.json").c_str())))
    return rc;
  if (opt.grid_res > 0) {
    if (auto rc = report(zl_fit_write_difference_grid(
            fit.ptr, samples.ptr, opt.grid_res,
            (opt.output + ".bfs_grid.csv").c_str())))
      return rc;
  }
  return 0;
}

int run_decompose(const FitOptions& opt, const std::string& strategy,
                  uint64_t seed, int top_k) {
  SamplesGuard samples;
  FitGuard fit;
  if (auto rc = load_and_fit(opt, samples, fit)) return rc;

  DecompositionGuard decomp;
  if (auto rc = report(zl_decompose(fit.ptr, parse_strategy(strategy), seed,
                                    &decomp.ptr)))
    return rc;

  double v0 = 0.0;
  zl_decomposition_v0(decomp.ptr, &v0);
  std::fprintf(stderr, "constant component: %.6g\n", v0);
  int level_count = 0;
  zl_decomposition_level_count(decomp.ptr, &level_count);
  for (int i = 0; i < level_count; ++i) {
    int level = 0, dim = 0;
    double energy = 0.0;
    zl_decomposition_level_info(decomp.ptr, i, &level, &dim, &energy);
    std::fprintf(stderr, "level %2d: dimension %3d, energy %.6g\n", level, dim,
                 energy);
  }

  if (top_k > 0) {
    std::vector<int> levels(top_k);
    std::vector<double> mu(top_k), omega(top_k), mag(top_k);
    int written = 0;
    zl_decomposition_top_coefficients(decomp.ptr, top_k, levels.data(), mu.data(),
                                      omega.data(), mag.data(), &written);
    for (int i = 0; i < written; ++i)
      std::fprintf(stderr,
                   "top %d: level %d at (rho %.4f, theta %.4f), magnitude %.6g\n",
                   i + 1, levels[i], mu[i], omega[i], mag[i]);
  }

  double zern = 0.0, wave = 0.0;
  if (auto rc = report(zl_decomposition_residuals(decomp.ptr, samples.ptr, &zern,
                                                  &wave)))
    return rc;
  std::fprintf(stderr, "residual l2: direct %.6g, multiscale %.6g\n", zern, wave);

  if (auto rc = report(zl_decomposition_write(
          decomp.ptr, (opt.output + ".decomp.csv").c_str())))
    return rc;
  if (opt.grid_res > 0) {
    if (auto rc = report(zl_decomposition_write_recon_grid(
            decomp.ptr, opt.grid_res, (opt.output + ".recon_grid.csv").c_str())))
      return rc;
  }
  return 0;
}

int run_validate(int max_degree, bool inject_fault, const std::string& output) {
  ValidationGuard validation;
  if (auto rc = report(zl_validate(max_degree, inject_fault ? 1 : 0,
                                   &validation.ptr)))
    return rc;
  int suite_count = 0;
  zl_validation_suite_count(validation.ptr, &suite_count);
  for (int i = 0; i < suite_count; ++i) {
    char name[64];
    double max_error = 0.0, tolerance = 0.0;
    int passed = 0;
    zl_validation_suite(validation.ptr, i, name, sizeof name, &max_error,
                        &tolerance, &passed);
    std::fprintf(stderr, "%-18s max error %.3e (tolerance %.0e) %s\n", name,
                 max_error, tolerance, passed ? "ok" : "FAILED");
  }
  if (!output.empty()) {
    if (auto rc = report(zl_validation_write(validation.ptr, output.c_str())))
      return rc;
  }
  int all_passed = 0;
  zl_validation_passed(validation.ptr, &all_passed);
  if (!all_passed) {
    std::fprintf(stderr, "validation FAILED\n");
    return 1;
  }
  std::fprintf(stderr, "validation passed\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiscale analysis of functions on the unit disk"};
  app.set_version_flag("--version", std::string(zl_version()));
  app.require_subcommand(1);

  // points
  auto* points = app.add_subcommand("points", "Write a point family as CSV");
  int degree = 8;
  int level = -1;
  std::string strategy = "fekete";
  uint64_t seed = 0;
  std::string output = "points.csv";
  points->add_option("--degree", degree, "Degree of the ring-structured family");
  points->add_option("--level", level,
                     "Detail level: write that level's parameter points instead");
  points->add_option("--strategy", strategy, "Parameter point strategy")
      ->check(CLI::IsMember({"fekete", "random"}));
  points->add_option("--seed", seed, "Seed for the point strategy");
  points->add_option("-o,--output", output, "Output CSV path");

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic surface");
  std::string kind = "normal";
  zl_synth_params params;
  zl_synth_params_default(&params);
  uint64_t synth_seed = 0;
  int synth_count = 10200;
  std::string synth_output = "samples.csv";
  synth->add_option("--kind", kind, "Surface family")
      ->check(CLI::IsMember({"normal", "astigmatism", "keratoconus"}));
  synth->add_option("--cap-radius", params.cap_radius, "Sphere radius, disk units");
  synth->add_option("--astig-amplitude", params.astig_amplitude, "Cylinder height");
  synth->add_option("--astig-axis", params.astig_axis, "Cylinder axis, radians");
  synth->add_option("--bump-amplitude", params.bump_amplitude, "Cone height");
  synth->add_option("--bump-sigma", params.bump_sigma, "Cone width");
  synth->add_option("--bump-rho", params.bump_rho, "Cone center radius");
  synth->add_option("--bump-theta", params.bump_theta, "Cone center angle");
  synth->add_option("--noise", params.noise_sigma, "Measurement noise sigma");
  synth->add_option("--seed", synth_seed, "Random seed");
  synth->add_option("--count", synth_count, "Number of samples");
  synth->add_option("-o,--output", synth_output, "Output CSV path");

  // fit
  auto* fit = app.add_subcommand("fit", "Least-squares fit of sampled heights");
  FitOptions fit_opt;
  fit->add_option("-i,--input", fit_opt.input, "Samples CSV (r,theta,z or x,y,z)")
      ->required();
  fit->add_option("--degree", fit_opt.degree, "Fit degree");
  fit->add_flag("--normalize", fit_opt.normalize,
                "Rescale radii by the maximum radius");
  fit->add_option("--grid-res", fit_opt.grid_res,
                  "Also write the sphere-subtracted surface on a grid with this "
                  "many rings");
  fit->add_option("-o,--output", fit_opt.output, "Output prefix")->required();

  // decompose
  auto* decompose =
      app.add_subcommand("decompose", "Fit, then split into detail levels");
  FitOptions dec_opt;
  std::string dec_strategy = "fekete";
  uint64_t dec_seed = 0;
  int top_k = 5;
  decompose->add_option("-i,--input", dec_opt.input, "Samples CSV")->required();
  decompose->add_option("--degree", dec_opt.degree, "Fit degree (even)");
  decompose->add_flag("--normalize", dec_opt.normalize,
                      "Rescale radii by the maximum radius");
  decompose->add_flag("--subtract-sphere", dec_opt.subtract_sphere,
                      "Remove the best-fit sphere before fitting, isolating "
                      "local shape");
  decompose->add_option("--strategy", dec_strategy, "Parameter point strategy")
      ->check(CLI::IsMember({"fekete", "random"}));
  decompose->add_option("--seed", dec_seed, "Seed for the point strategy");
  decompose->add_option("--top", top_k, "Print the k largest detail coefficients");
  decompose->add_option("--grid-res", dec_opt.grid_res,
                        "Also write the reassembled surface on a grid");
  decompose->add_option("-o,--output", dec_opt.output, "Output prefix")->required();

  // validate
  auto* validate = app.add_subcommand("validate", "Run the built-in checks");
  int max_degree = 8;
  bool inject_fault = false;
  std::string validate_output;
  validate->add_option("--max-degree", max_degree, "Largest degree exercised");
  validate->add_flag("--inject-fault", inject_fault,
                     "Corrupt intermediate data (negative control)");
  validate->add_option("-o,--output", validate_output, "Report JSON path");

  CLI11_PARSE(app, argc, argv);

  if (points->parsed()) return run_points(degree, level, strategy, seed, output);
  if (synth->parsed())
    return run_synth(kind, params, synth_seed, synth_count, synth_output);
  if (fit->parsed()) return run_fit(fit_opt);
  if (decompose->parsed())
    return run_decompose(dec_opt, dec_strategy, dec_seed, top_k);
  if (validate->parsed())
    return run_validate(max_degree, inject_fault, validate_output);
  return 0;
}
