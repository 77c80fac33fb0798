#pragma once

#include "knudsen/analytic_solution.hpp"
#include "knudsen/quadrature.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace knudsen {

enum class Acceleration { None, Anderson };
enum class Execution { Serial, OpenMP };

struct SolverConfig {
  double L = 25.0;         // domain truncation, mean free paths
  int nx = 2000;           // cells
  int n_mu = HalfRangeQuadrature::kDefaultNodes;
  double tol = 1e-12;      // sup-norm change between sweeps
  int max_iter = 20000;
  double fit_begin = 0.6;  // asymptote fit window as fractions of L
  double fit_end = 0.9;
  Acceleration acceleration = Acceleration::None;
  int anderson_depth = 6;
  Execution execution = Execution::OpenMP;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
  /// Non-fatal advice, e.g. a domain too short for the layer to decay.
  std::vector<std::string> warnings() const;
  double dx() const { return L / nx; }
};

/// Discrete distribution h(x_i, +-mu_k), node-major:
/// plus[k * points + i] = h(x_i, +mu_k), minus[k * points + i] = h(x_i, -mu_k).
struct NumericField {
  std::vector<double> x;
  std::vector<double> mu;
  std::vector<double> plus;
  std::vector<double> minus;
  int iterations = 0;
  bool converged = false;
  double residual_norm = 0.0;      // last sup-norm change
  std::vector<double> history;     // sup-norm change per iteration

  std::size_t points() const { return x.size(); }
  std::size_t nodes() const { return mu.size(); }
  double value(std::size_t i, std::size_t k, Side side) const {
    return side == Side::Plus ? plus[k * points() + i] : minus[k * points() + i];
  }
  /// h(x_i, +mu_k) and h(x_i, -mu_k) for every k.
  std::vector<double> plus_at(std::size_t i) const;
  std::vector<double> minus_at(std::size_t i) const;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, NumericField field)
      : std::runtime_error(what), field_(std::move(field)) {}
  const NumericField& field() const { return field_; }
  const std::vector<double>& history() const { return field_.history; }

 private:
  NumericField field_;
};

struct ExtractedAsymptotics {
  double eps_T_hat = 0.0;
  double eps_n_hat = 0.0;
  double slope_T_hat = 0.0;
  double slope_n_hat = 0.0;
  /// Knudsen-layer decay rate; empty when the layer is below the noise floor
  /// (2U = g_T removes it identically).
  std::optional<double> gamma_hat;
  int fit_points = 0;
  int layer_points = 0;
};

struct ComparisonReport {
  double sup_diff = 0.0;
  double rms_diff = 0.0;
  double eps_T_delta = 0.0;  // extracted minus analytic
  double eps_n_delta = 0.0;
};

/// Source iteration for the half-space problem:
///   S(x, mu) = m0 + mu m1 + (mu^2 - 1) m2 from the current field,
///   +dh/dx + h = S for mu > 0 from x = 0 with h(0, mu) = 0,
///   -dh/dx + h = S for mu < 0 from x = L,
/// with the incoming values at x = L taken from the Chapman-Enskog family
///   A0 + (2U - g_T) mu/sqrt(pi) + A2 (mu^2 - 1/2) + g_T (mu^2 - 3/2)(L - s)
/// whose free constants A0, A2 are fitted to the outgoing distribution at L
/// every iteration. No polynomial form is assumed inside the domain.
///
/// Throws ConvergenceError (carrying the field and its history) when the
/// iteration cap is reached, std::runtime_error on a non-finite moment.
NumericField solve(const BoundaryDrive& drive, const SolverConfig& config);
NumericField solve(const BoundaryDrive& drive, const SolverConfig& config,
                   const HalfRangeQuadrature& quad);

/// One source-iteration step applied to an existing field (moments, outgoing
/// sweep, closure, incoming sweep). The returned field has iterations = 1 and
/// residual_norm = sup-norm change.
NumericField source_iteration_step(const NumericField& field, const BoundaryDrive& drive,
                                   const SolverConfig& config, const HalfRangeQuadrature& quad);

/// The closed-form solution sampled on the solver grid.
NumericField sample_analytic(const AnalyticSolution& solution, const SolverConfig& config,
                             const HalfRangeQuadrature& quad);

/// Incoming h(L, -mu_k) from the outgoing values h(L, +mu_k).
std::vector<double> far_field_closure(std::span<const double> outgoing_at_L,
                                      const BoundaryDrive& drive, double L,
                                      const HalfRangeQuadrature& quad);

/// dn, u, dT at every grid point.
std::vector<MacroState> macro_profile(const NumericField& field, const HalfRangeQuadrature& quad);

/// Least-squares far-field fit over [fit_begin, fit_end] L and a log-linear
/// fit of the temperature residual over the first quarter of the domain.
ExtractedAsymptotics extract_asymptotics(const NumericField& field, const SolverConfig& config,
                                         const HalfRangeQuadrature& quad);

ComparisonReport compare_to_analytic(const NumericField& field, const BoundaryDrive& drive,
                                     const SolverConfig& config, const HalfRangeQuadrature& quad);

/// Pointwise evaluator for residual checks; dx may be empty, in which case a
/// central difference in x is used (one-sided at x = 0).
struct FieldEvaluator {
  std::function<double(double x, double mu)> value;
  std::function<double(double x, double mu)> dx;
};

/// sign(mu) dh/dx + h - S(x, mu), S from the quadrature of h at x.
double residual(const FieldEvaluator& h, double x, double mu, const HalfRangeQuadrature& quad);
double residual(const AnalyticSolution& h, double x, double mu, const HalfRangeQuadrature& quad);
/// Discrete residual at grid point i (> 0 for mu > 0, < last for mu < 0)
/// from the trapezoidal balance over the upwind cell.
double residual(const NumericField& field, std::size_t i, std::size_t k, Side side,
                const HalfRangeQuadrature& quad);

}  // namespace knudsen
