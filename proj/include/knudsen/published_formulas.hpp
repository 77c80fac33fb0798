#pragma once

#include "knudsen/analytic_solution.hpp"

// Closed-form expressions as they appear in the published treatment of this
// problem, kept verbatim so that reports can set them beside the values this
// library derives. None of them is used by the solvers.
//
// The published layer mode (mu - 2 mu^2/sqrt(5))(1/gamma0 + s) is not a
// solution of the kinetic equation: integrating b2' = (sqrt(pi)/4) b1 gives
// -B1/sqrt(5) rather than -2 B1/sqrt(5), and with the corrected mode
// (mu - (1 + mu^2)/sqrt(5))(1/gamma0 + s) the wall condition yields the jumps
// in jump_coefficients(). The numerical transport solver reproduces the
// corrected values independently.
namespace knudsen::published {

/// eps_T = (1 + 1/(2 gamma0)) g_T - (1/(2 gamma0)) 2U
/// eps_n = -(1 - 1/(4 gamma0)) g_T - (1/(4 gamma0)) 2U
JumpCoefficients jump_coefficients(const BoundaryDrive& drive);

/// Printed four-decimal values of the same coefficients.
inline constexpr double kEpsT_gT = 1.5046;
inline constexpr double kEpsT_2U = -0.5046;
inline constexpr double kEpsn_gT = -0.7477;
inline constexpr double kEpsn_2U = -0.2523;

/// Printed decay-rate approximation.
inline constexpr double kGamma0 = 0.9908;

/// Printed density-layer coefficient c_n in
///   dn = eps_n - g_T x - c_n (2U - g_T) e^{-gamma0 x}
/// together with its printed closed form.
inline constexpr double kDensityLayer = 0.0317;
double density_layer_expression();

/// Printed temperature-layer coefficient c_T in
///   dT = eps_T + g_T x + c_T (2U - g_T) e^{-gamma0 x}
/// together with its printed closed form (sqrt(pi)/8 - 1/sqrt(5)) / (sqrt(pi)(1 + gamma0)).
inline constexpr double kTemperatureLayer = -0.0639;
double temperature_layer_expression();

/// Printed kinetic coefficients N_T, N_U, T_T, T_U (four-decimal constants).
KineticCoefficients kinetic_coefficients(double x);
KineticCoefficients kinetic_asymptotes(double x);

/// Published closed-form distribution
///   h = -(2U - g_T) e^{-gamma0 x}/sqrt(pi) (1 + gamma0 s)/(1 + gamma0) (mu - 2 mu^2/sqrt(5))
///       + eps_n + eps_T + (2U - g_T) mu/sqrt(pi) + (mu^2 - 3/2)[eps_T + g_T (x - s)]
/// with the published jumps.
double h(const BoundaryDrive& drive, double x, double mu, Side side);
double dh_dx(const BoundaryDrive& drive, double x, double mu, Side side);

/// Published evaporation distribution per unit 2U in its alternative form
///   1/(4 gamma0) + (mu - 2 mu^2/sqrt(5))/sqrt(pi) [1 - (1 + gamma0 s)/(1 + gamma0) e^{-gamma0 x}].
double evaporation_per_2U(double x, double mu, Side side);

}  // namespace knudsen::published
