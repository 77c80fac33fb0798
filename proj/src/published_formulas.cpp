#include "knudsen/published_formulas.hpp"

#include <cmath>

namespace knudsen::published {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
const double kSqrt5 = std::sqrt(5.0);

double sign_of(Side side) { return side == Side::Plus ? 1.0 : -1.0; }
}  // namespace

JumpCoefficients jump_coefficients(const BoundaryDrive& drive) {
  const double g = gamma0();
  return {(1.0 + 1.0 / (2.0 * g)) * drive.g_T - drive.twoU() / (2.0 * g),
          -(1.0 - 1.0 / (4.0 * g)) * drive.g_T - drive.twoU() / (4.0 * g)};
}

double density_layer_expression() {
  const double g = gamma0();
  return (g / kSqrtPi - kSqrtPi / (4.0 * g)) / (kSqrtPi * (1.0 + g));
}

double temperature_layer_expression() {
  const double g = gamma0();
  return (kSqrtPi / 8.0 - 1.0 / kSqrt5) / (kSqrtPi * (1.0 + g));
}

KineticCoefficients kinetic_coefficients(double x) {
  const double decay = std::exp(-gamma0() * x);
  return {0.7477 + x - 0.0317 * decay, 0.2523 + 0.0317 * decay, 1.5046 + x + 0.0639 * decay,
          0.5046 + 0.0639 * decay};
}

KineticCoefficients kinetic_asymptotes(double x) { return {0.7477 + x, 0.2523, 1.5046 + x, 0.5046}; }

double h(const BoundaryDrive& drive, double x, double mu, Side side) {
  const double g = gamma0();
  const double s = sign_of(side);
  const JumpCoefficients j = published::jump_coefficients(drive);
  const double a = drive.layer_drive();
  return -a * std::exp(-g * x) / kSqrtPi * (1.0 + g * s) / (1.0 + g) * (mu - 2.0 * mu * mu / kSqrt5) +
         j.eps_n + j.eps_T + a * mu / kSqrtPi + (mu * mu - 1.5) * (j.eps_T + drive.g_T * (x - s));
}

double dh_dx(const BoundaryDrive& drive, double x, double mu, Side side) {
  const double g = gamma0();
  const double s = sign_of(side);
  const double a = drive.layer_drive();
  return g * a * std::exp(-g * x) / kSqrtPi * (1.0 + g * s) / (1.0 + g) *
             (mu - 2.0 * mu * mu / kSqrt5) +
         drive.g_T * (mu * mu - 1.5);
}

double evaporation_per_2U(double x, double mu, Side side) {
  const double g = gamma0();
  const double s = sign_of(side);
  return 1.0 / (4.0 * g) + (mu - 2.0 * mu * mu / kSqrt5) / kSqrtPi *
                               (1.0 - (1.0 + g * s) / (1.0 + g) * std::exp(-g * x));
}

}  // namespace knudsen::published
