#pragma once

#include "knudsen/analytic_solution.hpp"
#include "knudsen/transport_solver.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace knudsen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Version string written into every CSV header line.
const char* version();

/// Entry point of the command-line tool. Everything the tool prints goes to
/// out/err; files named by --out are written atomically.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Machine-readable result of the solve subcommand.
struct SolveSummary {
  BoundaryDrive drive;
  double L = 0.0;
  int nx = 0;
  int n_mu = 0;
  double tol = 0.0;
  int max_iter = 0;
  std::string acceleration;
  std::string execution;
  bool converged = false;
  int iterations = 0;
  double residual_norm = 0.0;
  double eps_T_hat = 0.0;
  double eps_n_hat = 0.0;
  double slope_T_hat = 0.0;
  double slope_n_hat = 0.0;
  std::optional<double> gamma_hat;
  double eps_T = 0.0;
  double eps_n = 0.0;
  double gamma0 = 0.0;
  double sup_diff = 0.0;
  double rms_diff = 0.0;
  double eps_T_delta = 0.0;
  double eps_n_delta = 0.0;
  double mass_flux_deviation = 0.0;
  std::vector<std::string> warnings;

  bool operator==(const SolveSummary&) const = default;
};

SolveSummary summarize(const NumericField& field, const BoundaryDrive& drive,
                       const SolverConfig& config, const HalfRangeQuadrature& quad);
std::string to_json(const SolveSummary& summary);
SolveSummary summary_from_json(const std::string& text);

/// Jump coefficients as reported by the jumps subcommand.
struct JumpReport {
  BoundaryDrive drive;
  JumpCoefficients jumps;
  JumpSensitivities sensitivities;
  JumpCoefficients published;

  bool operator==(const JumpReport&) const = default;
};

JumpReport jump_report(const BoundaryDrive& drive);
std::string to_json(const JumpReport& report);
JumpReport jump_report_from_json(const std::string& text);

/// Formats a value with 12 significant digits, as every CSV column does.
std::string csv_number(double v);

}  // namespace knudsen::cli
