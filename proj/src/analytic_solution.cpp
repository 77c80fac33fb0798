#include "knudsen/analytic_solution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace knudsen {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;  // sqrt(pi)

double sign_of(Side side) { return side == Side::Plus ? 1.0 : -1.0; }

Side side_of(double mu) {
  if (mu == 0.0) {
    throw std::domain_error("mu = 0 is a discontinuity of h; request a side explicitly");
  }
  return mu > 0.0 ? Side::Plus : Side::Minus;
}

void require_x(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("x must be finite and >= 0, got " + std::to_string(x));
  }
}

JumpCoefficients jumps_for(const BoundaryDrive& d, double gamma) {
  JumpCoefficients j;
  const double k = 1.0 / (4.0 * gamma);
  j.eps_T = (1.0 + k) * d.g_T - k * d.twoU();
  j.eps_n = 1.5 * j.eps_T - 2.5 * d.g_T;
  return j;
}

}  // namespace

double gamma0() { return std::sqrt(5.0 * std::numbers::pi) / 4.0; }

JumpCoefficients jump_coefficients(const BoundaryDrive& drive) {
  return jumps_for(drive, gamma0());
}

JumpSensitivities jump_sensitivities() {
  const double k = 1.0 / (4.0 * gamma0());
  return {1.0 + k, -k, 1.5 * (1.0 + k) - 2.5, -1.5 * k};
}

AnalyticSolution::AnalyticSolution(BoundaryDrive drive) : AnalyticSolution(drive, gamma0()) {}

AnalyticSolution::AnalyticSolution(BoundaryDrive drive, double gamma)
    : drive_(drive), gamma_(gamma), jumps_(jumps_for(drive, gamma)) {
  if (!std::isfinite(drive.g_T) || !std::isfinite(drive.U)) {
    throw std::domain_error("boundary drive must be finite");
  }
  if (!(gamma > 0.0)) throw std::domain_error("decay rate must be positive");
}

double AnalyticSolution::A1() const { return drive_.layer_drive() / kSqrtPi; }

double AnalyticSolution::B1() const {
  return -drive_.layer_drive() / (kSqrtPi * (1.0 + 1.0 / gamma_));
}

double AnalyticSolution::mode_c() const { return kSqrtPi / (4.0 * gamma_); }

double AnalyticSolution::layer(double x, double mu, Side side) const {
  require_x(x);
  const double s = sign_of(side);
  const double shape = mu - mode_c() * (1.0 + mu * mu);
  return B1() * std::exp(-gamma_ * x) * (1.0 / gamma_ + s) * shape;
}

double AnalyticSolution::chapman_enskog(double x, double mu, Side side) const {
  require_x(x);
  const double s = sign_of(side);
  const double mu2 = mu * mu;
  return jumps_.eps_n + drive_.layer_drive() * mu / kSqrtPi + jumps_.eps_T * (mu2 - 0.5) +
         drive_.g_T * (mu2 - 1.5) * (x - s);
}

double AnalyticSolution::chapman_enskog(double x, double mu) const {
  return chapman_enskog(x, mu, side_of(mu));
}

double AnalyticSolution::h(double x, double mu, Side side) const {
  return layer(x, mu, side) + chapman_enskog(x, mu, side);
}

double AnalyticSolution::h(double x, double mu) const { return h(x, mu, side_of(mu)); }

double AnalyticSolution::h_plus(double x, double mu) const {
  if (mu < 0.0) throw std::domain_error("h_plus requires mu >= 0");
  return h(x, mu, Side::Plus);
}

double AnalyticSolution::h_minus(double x, double mu) const {
  if (mu > 0.0) throw std::domain_error("h_minus requires mu <= 0");
  return h(x, mu, Side::Minus);
}

double AnalyticSolution::dh_dx(double x, double mu, Side side) const {
  return -gamma_ * layer(x, mu, side) + drive_.g_T * (mu * mu - 1.5);
}

double AnalyticSolution::discontinuity(double x) const {
  return h(x, 0.0, Side::Plus) - h(x, 0.0, Side::Minus);
}

MacroProfile AnalyticSolution::macro_profile(double x) const {
  require_x(x);
  const LayerCoefficients c = layer_coefficients(gamma_);
  const double decay = std::exp(-gamma_ * x);
  MacroProfile p;
  p.state.dn = jumps_.eps_n - drive_.g_T * x + c.density * drive_.layer_drive() * decay;
  p.state.u = drive_.U;
  p.state.dT = jumps_.eps_T + drive_.g_T * x - c.temperature * drive_.layer_drive() * decay;
  p.coefficients = kinetic_coefficients(x);
  p.asymptotes = kinetic_asymptotes(x);
  return p;
}

Distribution AnalyticSolution::at(double x) const {
  require_x(x);
  return [self = *this, x](double mu) { return self.h(x, mu); };
}

LayerCoefficients layer_coefficients(double gamma) {
  // Moments of the layer shape (1 + gamma s)(mu - c(1 + mu^2)), c = sqrt(pi)/(4 gamma):
  //   (1/sqrt(pi)) int e^{-mu^2} (...)            = gamma/sqrt(pi) - 3c/2
  //   (2/sqrt(pi)) int e^{-mu^2} (mu^2 - 1/2)(...) = gamma/sqrt(pi) - c
  // divided by -sqrt(pi)(1 + gamma) from the layer amplitude.
  const double pi = std::numbers::pi;
  LayerCoefficients c;
  c.density = (3.0 / (8.0 * gamma) - gamma / pi) / (1.0 + gamma);
  c.temperature = (gamma / pi - 1.0 / (4.0 * gamma)) / (1.0 + gamma);
  return c;
}

LayerCoefficients layer_coefficients() { return layer_coefficients(gamma0()); }

LayerCoefficients layer_coefficients_by_quadrature(const HalfRangeQuadrature& quad) {
  // Unit layer drive (g_T = 0, 2U = 1) at x = 0; only the layer term enters.
  const AnalyticSolution sol(BoundaryDrive{0.0, 0.5});
  const Distribution layer = [&sol](double mu) {
    return sol.layer(0.0, mu, mu > 0.0 ? Side::Plus : Side::Minus);
  };
  const MacroState m = macros_from_distribution(layer, quad);
  return {m.dn, -m.dT};
}

KineticCoefficients kinetic_coefficients(double x) {
  const double g = gamma0();
  const LayerCoefficients c = layer_coefficients(g);
  const double decay = std::exp(-g * x);
  KineticCoefficients k;
  k.N_T = 1.0 - 3.0 / (8.0 * g) + x + c.density * decay;
  k.N_U = 3.0 / (8.0 * g) - c.density * decay;
  k.T_T = 1.0 + 1.0 / (4.0 * g) + x + c.temperature * decay;
  k.T_U = 1.0 / (4.0 * g) + c.temperature * decay;
  return k;
}

KineticCoefficients kinetic_asymptotes(double x) {
  const double g = gamma0();
  KineticCoefficients k;
  k.N_T = 1.0 - 3.0 / (8.0 * g) + x;
  k.N_U = 3.0 / (8.0 * g);
  k.T_T = 1.0 + 1.0 / (4.0 * g) + x;
  k.T_U = 1.0 / (4.0 * g);
  return k;
}

ProblemSplit problem_split(double x, double mu, Side side) {
  static const AnalyticSolution temperature(BoundaryDrive{1.0, 0.0});
  static const AnalyticSolution evaporation(BoundaryDrive{0.0, 0.5});
  return {temperature.h(x, mu, side), evaporation.h(x, mu, side)};
}

ProblemSplit problem_split(double x, double mu) {
  return problem_split(x, mu, side_of(mu));
}

}  // namespace knudsen
