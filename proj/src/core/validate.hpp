#pragma once

#include <string>
#include <vector>

#include "core/mra.hpp"

namespace zernlets {

struct SuiteResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationReport {
  int max_degree = 0;
  bool fault_injected = false;
  std::vector<SuiteResult> suites;

  bool all_passed() const;
};

// Runs the invariant suites (orthonormality, reproducing property, kernel
// closed-form equivalence, scaling duality, wavelet duality, multiscale round
// trip) up to max_degree.  inject_fault corrupts intermediate data on purpose
// (negative control: the suites must then fail).
ValidationReport run_validation(int max_degree = 8, bool inject_fault = false);

void write_validation_json(const std::string& path, const ValidationReport& report);

}  // namespace zernlets
