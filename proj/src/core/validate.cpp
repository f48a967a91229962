#include "core/validate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "core/kernel.hpp"
#include "core/quadrature.hpp"
#include "core/rng.hpp"
#include "core/scaling.hpp"
#include "core/wavelet.hpp"

namespace zernlets {

namespace {

constexpr uint64_t kSuiteSeed = 12345;

PolarPoint random_point(Rng& rng) {
  return {std::sqrt(rng.uniform01()), 2.0 * std::numbers::pi * rng.uniform01()};
}

DiskPolynomial random_poly(int degree, Rng& rng) {
  DiskPolynomial p = DiskPolynomial::zero(degree);
  for (int j = 0; j < p.coeffs.size(); ++j)
    p.coeffs[j] = complexd(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
  return p;
}

SuiteResult orthonormality_suite(int max_degree, bool fault) {
  DiskQuadrature rule = DiskQuadrature::for_degree(2 * max_degree);
  if (fault) rule.radial_weights[0] *= 1.0 + 1e-6;
  const auto pts = rule.grid_points();
  const auto w = rule.grid_weights();
  const int dim = space_dim(max_degree);
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dim, dim);
  for (size_t i = 0; i < pts.size(); ++i) {
    const Eigen::VectorXcd row = basis_row(max_degree, pts[i]);
    gram.noalias() += w[i] * row * row.adjoint();
  }
  const double err =
      (gram - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  return {"orthonormality", err, 1e-10, err <= 1e-10};
}

SuiteResult reproducing_suite(int max_degree) {
  Rng rng(kSuiteSeed + 1);
  double worst = 0.0;
  for (int n = 2; n <= std::max(2, max_degree); ++n) {
    // Integrating p(x) conj(K(x, anchor)) over the disk must give p(anchor);
    // the rule is exact for the degree-2n product.
    const auto rule = DiskQuadrature::for_degree(2 * n);
    for (int t = 0; t < 20; ++t) {
      const auto p = random_poly(n, rng);
      const auto anchor = random_point(rng);
      const auto kernel = kernel_build(n, anchor);
      const complexd lhs = rule.inner_product(
          [&](PolarPoint pt) { return eval_poly(p, pt); },
          [&](PolarPoint pt) { return eval_poly(kernel.poly, pt); });
      worst = std::max(worst, std::abs(lhs - eval_poly(p, anchor)));
    }
  }
  return {"reproducing", worst, 1e-10, worst <= 1e-10};
}

SuiteResult cd_equivalence_suite(int max_degree) {
  Rng rng(kSuiteSeed + 2);
  double worst = 0.0;
  for (int n = 2; n <= std::max(2, max_degree); ++n) {
    int done = 0;
    while (done < 50) {
      const auto anchor = random_point(rng);
      const auto pt = random_point(rng);
      if (std::abs(pt.rho * pt.rho - anchor.rho * anchor.rho) < 1e-3) continue;
      ++done;
      const double direct = kernel_eval_direct(n, anchor, pt);
      const double cd = kernel_eval_cd(n, anchor, pt);
      worst = std::max(worst, std::abs(cd - direct) / std::abs(direct));
    }
  }
  return {"cd_equivalence", worst, 1e-8, worst <= 1e-8};
}

SuiteResult scaling_duality_suite(int max_degree) {
  double worst = 0.0;
  for (int n : {3, 5, 8}) {
    if (n > std::max(3, max_degree)) continue;
    const auto basis = scaling_build(n);
    const auto dual = lagrange_dual(basis);
    const int dim = space_dim(n);
    for (int j = 0; j < dim; ++j) {
      DiskPolynomial lj{n, dual.coeffs.row(j).transpose()};
      for (int k = 0; k < dim; ++k) {
        const complexd ip = inner_product(basis.functions[k].poly, lj);
        worst = std::max(worst, std::abs(ip - (j == k ? 1.0 : 0.0)));
      }
    }
  }
  return {"scaling_duality", worst, 1e-9, worst <= 1e-9};
}

SuiteResult wavelet_duality_suite(int max_degree, bool fault) {
  Rng rng(kSuiteSeed + 3);
  double worst = 0.0;
  for (int level : {1, 2, 3, 4}) {
    if (level > std::max(1, max_degree / 2)) continue;
    const auto params =
        wavelet_parameter_points(level, PointStrategy::Fekete, kSuiteSeed);
    const auto basis = wavelet_build(level, params);
    auto duals = dual_build(basis);
    if (fault) duals.dual_block(0, 0) += 1e-4;
    const IndexBlock blk = basis.block();
    for (int t = 0; t < 5; ++t) {
      auto f = DiskPolynomial::zero(basis.upper_degree());
      for (int l = blk.lo; l < blk.hi; ++l)
        f.coeffs[l] =
            complexd(2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0);
      const auto back =
          dual_reconstruct(wavelet_coefficients(f, basis), basis, duals);
      worst = std::max(worst, (back.coeffs - f.coeffs).cwiseAbs().maxCoeff());
    }
  }
  return {"wavelet_duality", worst, 1e-8, worst <= 1e-8};
}

SuiteResult mra_round_trip_suite(int max_degree) {
  int n = 1;
  while (2 * n <= max_degree) n *= 2;
  Rng rng(kSuiteSeed + 4);
  const auto basis = multiscale_build(n, PointStrategy::Fekete, 0);
  double worst = 0.0;
  for (int t = 0; t < 5; ++t) {
    const auto f = random_poly(n, rng);
    const auto back = reconstruct(decompose(f, basis), basis);
    worst = std::max(worst, (back.coeffs - f.coeffs).cwiseAbs().maxCoeff());
  }
  return {"mra_round_trip", worst, 1e-8, worst <= 1e-8};
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed; });
}

ValidationReport run_validation(int max_degree, bool inject_fault) {
  if (max_degree < 1 || max_degree > 20)
    throw std::invalid_argument("run_validation: max degree out of range [1, 20]");
  ValidationReport report;
  report.max_degree = max_degree;
  report.fault_injected = inject_fault;
  report.suites.push_back(orthonormality_suite(max_degree, inject_fault));
  report.suites.push_back(reproducing_suite(max_degree));
  report.suites.push_back(cd_equivalence_suite(max_degree));
  report.suites.push_back(scaling_duality_suite(max_degree));
  report.suites.push_back(wavelet_duality_suite(max_degree, inject_fault));
  report.suites.push_back(mra_round_trip_suite(max_degree));
  return report;
}

void write_validation_json(const std::string& path, const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["max_degree"] = report.max_degree;
  j["fault_injected"] = report.fault_injected;
  j["all_passed"] = report.all_passed();
  j["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : report.suites)
    j["suites"].push_back({{"name", s.name},
                           {"max_error", s.max_error},
                           {"tolerance", s.tolerance},
                           {"passed", s.passed}});
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace zernlets
