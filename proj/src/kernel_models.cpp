#include "knudsen/kernel_models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace knudsen {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::domain_error(std::string(what) + " must be finite");
  }
}

}  // namespace

KernelCoefficients kernel_coefficients(double a) {
  if (!std::isfinite(a) || a < 0.0) {
    throw std::domain_error("kernel_coefficients: a must be finite and >= 0, got " +
                            std::to_string(a));
  }
  KernelCoefficients c;
  c.r0 = 1.0 / (a + 1.0);
  c.r1 = 2.0 / (2.0 * a + 1.0);
  c.r2 = 4.0 * (a + 1.0) / (4.0 * a * a + 7.0 * a + 2.0);
  c.beta = (2.0 * a + 1.0) / (2.0 * (a + 1.0));
  return c;
}

double kernel_affine(double mu, double mu_prime, double a) {
  require_finite(mu, "mu");
  require_finite(mu_prime, "mu'");
  const KernelCoefficients c = kernel_coefficients(a);
  const double q = c.r0 + c.r1 * mu * mu_prime +
                   c.r2 * (mu * mu - c.beta) * (mu_prime * mu_prime - c.beta);
  return (1.0 + std::sqrt(std::numbers::pi) * a * std::abs(mu_prime)) * q;
}

double kernel_q1(double mu, double mu_prime) {
  return 1.0 + mu * mu_prime + (mu * mu - 1.0) * (mu_prime * mu_prime - 1.0);
}

double scaled_kernel(const FrequencyModel& model, double mu, double mu_prime) {
  if (const auto* affine = std::get_if<AffineFrequency>(&model)) {
    return kernel_affine(mu, mu_prime, affine->a);
  }
  return std::sqrt(std::numbers::pi) * std::abs(mu_prime) * kernel_q1(mu, mu_prime);
}

double kernel_limit_deviation(double mu, double mu_prime, double a) {
  if (!(a > 0.0)) {
    throw std::domain_error("kernel_limit_deviation: a must be > 0");
  }
  const double limit = std::sqrt(std::numbers::pi) * std::abs(mu_prime) * kernel_q1(mu, mu_prime);
  return std::abs(kernel_affine(mu, mu_prime, a) - limit);
}

double kernel_limit_deviation(double mu, double mu_prime, const FrequencyModel& model) {
  if (const auto* affine = std::get_if<AffineFrequency>(&model)) {
    return kernel_limit_deviation(mu, mu_prime, affine->a);
  }
  return 0.0;
}

}  // namespace knudsen
