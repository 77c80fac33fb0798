#pragma once

#include "knudsen/quadrature.hpp"

namespace knudsen {

/// Far-field drive of the half-space problem. g_T = (d ln T / dx) at infinity;
/// U is the evaporation (condensation) velocity in the mass-flux normalization
/// of MacroState::u. Linear theory assumes |g_T|, |U| << 1; not enforced.
struct BoundaryDrive {
  double g_T = 0.0;
  double U = 0.0;

  double twoU() const { return 2.0 * U; }
  /// 2U - g_T: amplitude of the velocity mode and of the Knudsen layer.
  double layer_drive() const { return 2.0 * U - g_T; }

  bool operator==(const BoundaryDrive&) const = default;
};

struct JumpCoefficients {
  double eps_T = 0.0;
  double eps_n = 0.0;

  bool operator==(const JumpCoefficients&) const = default;
};

/// Which one-sided limit to take at mu = 0.
enum class Side { Plus, Minus };

/// Knudsen-layer decay rate sqrt(5 pi)/4.
double gamma0();

/// Temperature and concentration jumps of the boundary-value problem:
///   eps_T = (1 + 1/(4 gamma0)) g_T - (1/(4 gamma0)) 2U
///   eps_n = (3/2) eps_T - (5/2) g_T
JumpCoefficients jump_coefficients(const BoundaryDrive& drive);

/// Per-unit-drive partial derivatives of the jumps.
struct JumpSensitivities {
  double dEpsT_dgT;
  double dEpsT_d2U;
  double dEpsn_dgT;
  double dEpsn_d2U;

  bool operator==(const JumpSensitivities&) const = default;
};
JumpSensitivities jump_sensitivities();

/// Drive-separated profile functions:
///   dn(x) = -g_T N_T(x) - 2U N_U(x),   dT(x) = g_T T_T(x) - 2U T_U(x).
struct KineticCoefficients {
  double N_T = 0.0;
  double N_U = 0.0;
  double T_T = 0.0;
  double T_U = 0.0;
};

struct MacroProfile {
  MacroState state;
  KineticCoefficients coefficients;
  KineticCoefficients asymptotes;
};

/// h^T / g_T and h^U / (2U) at a point; h = g_T hT + 2U hU.
struct ProblemSplit {
  double temperature = 0.0;
  double evaporation = 0.0;
};

/// Closed-form solution of
///   sign(mu) dh/dx + h = int exp(-mu'^2) |mu'| q1(mu, mu') h(x, mu') dmu'
/// on x > 0 with diffuse reflection h(0, mu > 0) = 0 and Chapman-Enskog
/// behavior at infinity:
///
///   h = -(2U - g_T) exp(-gamma0 x)/sqrt(pi) * (1 + gamma0 s)/(1 + gamma0)
///         * (mu - c (1 + mu^2))
///       + eps_n + (2U - g_T) mu/sqrt(pi) + eps_T (mu^2 - 1/2)
///       + g_T (mu^2 - 3/2)(x - s),
///
/// s = sign(mu), c = sqrt(pi)/(4 gamma0) = 1/sqrt(5).
///
/// The decay rate is a constructor argument only so that sensitivity tests can
/// perturb it; every derived constant follows the supplied value.
class AnalyticSolution {
 public:
  explicit AnalyticSolution(BoundaryDrive drive);
  AnalyticSolution(BoundaryDrive drive, double gamma);

  const BoundaryDrive& drive() const { return drive_; }
  double gamma() const { return gamma_; }
  const JumpCoefficients& jumps() const { return jumps_; }

  // Constants of the decomposition
  //   h = B1 e^{-gamma x} (1/gamma + s)(mu - c(1 + mu^2))
  //     + A0 + A1 mu + A2 (mu^2 - 1) + (s - x)[B0 + B2 (mu^2 - 1)].
  double A0() const { return jumps_.eps_n + 0.5 * jumps_.eps_T; }
  double A1() const;
  double A2() const { return jumps_.eps_T; }
  double B0() const { return 0.5 * drive_.g_T; }
  double B1() const;
  double B2() const { return -drive_.g_T; }
  double mode_c() const;

  /// h(x, mu) for mu != 0. Throws std::domain_error for x < 0 or mu == 0.
  double h(double x, double mu) const;
  /// h with an explicit branch; at mu == 0 this is the one-sided limit.
  double h(double x, double mu, Side side) const;
  /// Outgoing branch (mu > 0, or the +0 limit). Throws for mu < 0.
  double h_plus(double x, double mu) const;
  /// Incoming branch (mu < 0, or the -0 limit). Throws for mu > 0.
  double h_minus(double x, double mu) const;
  /// Analytic x-derivative on the given branch.
  double dh_dx(double x, double mu, Side side) const;

  /// Polynomial part (h minus the exponential layer).
  double chapman_enskog(double x, double mu, Side side) const;
  double chapman_enskog(double x, double mu) const;
  /// Exponential Knudsen-layer part.
  double layer(double x, double mu, Side side) const;

  /// h(x, +0) - h(x, -0) = 3 g_T + (2U - g_T) e^{-gamma x} / (2 (1 + gamma)).
  double discontinuity(double x) const;

  /// Closed-form macroparameters; u is exactly U.
  MacroProfile macro_profile(double x) const;

  /// Distribution at fixed x as a quadrature-ready callable.
  Distribution at(double x) const;

 private:
  BoundaryDrive drive_;
  double gamma_;
  JumpCoefficients jumps_;
};

/// Coefficients of the exponential layer in the macroprofiles:
///   dn = eps_n - g_T x + density (2U - g_T) e^{-gamma0 x}
///   dT = eps_T + g_T x - temperature (2U - g_T) e^{-gamma0 x}
/// Both equal 1/(16 gamma0 (1 + gamma0)) at gamma = gamma0.
struct LayerCoefficients {
  double density = 0.0;
  double temperature = 0.0;
};
LayerCoefficients layer_coefficients(double gamma);
LayerCoefficients layer_coefficients();

/// Layer coefficients obtained by integrating the closed-form layer term with
/// the half-range rule instead of the exact expressions.
LayerCoefficients layer_coefficients_by_quadrature(const HalfRangeQuadrature& quad);

KineticCoefficients kinetic_coefficients(double x);
KineticCoefficients kinetic_asymptotes(double x);

ProblemSplit problem_split(double x, double mu);
ProblemSplit problem_split(double x, double mu, Side side);

}  // namespace knudsen
