#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knudsen {

struct CheckResult {
  std::string group;
  std::string name;
  bool passed = false;
  /// Informational rows are printed but never affect the verdict.
  bool informational = false;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerifyOptions {
  /// Added to gamma0 in the closed-form solution under test. Non-zero values
  /// exist to demonstrate that the residual checks detect a wrong decay rate.
  double gamma_perturbation = 0.0;
  bool include_solver = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  int failures() const;
};

/// Kernel limits, quadrature exactness and orthogonality, the boundary
/// identity, equation residuals, conservation, jump and layer coefficients,
/// and a small numerical cross-check.
VerifyReport run_verification(const VerifyOptions& options = {});

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace knudsen
