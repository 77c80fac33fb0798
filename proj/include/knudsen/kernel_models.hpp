#pragma once

#include <variant>

namespace knudsen {

// Dimensionless variables used throughout the library:
//   mu = v / v_T,  v_T = 1/sqrt(beta_s),  beta_s = m / (2 k_B T_s)
//   x  = physical distance / l_1,  l_1 = v_T * tau_1,  tau_1 = 1 / nu_1
// The collision frequency is nu(mu) = nu_0 (1 + sqrt(pi) a |mu|) = nu_0 + nu_1 |mu|,
// so a = nu_1 / (sqrt(pi) nu_0). Only a is carried; the dimensional
// quantities have no arithmetic role.

/// Affine collision frequency with finite slope parameter a >= 0.
struct AffineFrequency {
  double a = 0.0;
};

/// The a -> +infinity limit: collision frequency proportional to |mu|.
struct SpeedProportionalFrequency {};

using FrequencyModel = std::variant<AffineFrequency, SpeedProportionalFrequency>;

struct KernelCoefficients {
  double r0 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double beta = 0.0;
};

/// Coefficients of the scattering kernel
///   q(mu, mu', a) = r0 + r1 mu mu' + r2 (mu^2 - beta)(mu'^2 - beta).
/// Throws std::domain_error for negative or non-finite a.
KernelCoefficients kernel_coefficients(double a);

/// (1 + sqrt(pi) a |mu'|) q(mu, mu', a).
double kernel_affine(double mu, double mu_prime, double a);

/// Limit kernel q1(mu, mu') = 1 + mu mu' + (mu^2 - 1)(mu'^2 - 1).
double kernel_q1(double mu, double mu_prime);

/// Scaled kernel of the chosen frequency model: kernel_affine for finite a,
/// sqrt(pi) |mu'| q1 for the speed-proportional limit.
double scaled_kernel(const FrequencyModel& model, double mu, double mu_prime);

/// |kernel_affine(mu, mu', a) - sqrt(pi) |mu'| q1(mu, mu')|. Decays like 1/a.
/// Zero for the speed-proportional limit itself; a <= 0 is a domain error.
double kernel_limit_deviation(double mu, double mu_prime, const FrequencyModel& model);
double kernel_limit_deviation(double mu, double mu_prime, double a);

}  // namespace knudsen
