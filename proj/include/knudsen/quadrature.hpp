#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace knudsen {

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, int failing_degree)
      : std::runtime_error(what), failing_degree_(failing_degree) {}
  int failing_degree() const { return failing_degree_; }

 private:
  int failing_degree_;
};

/// Gaussian rule for the weight exp(-mu^2) on [0, inf):
///   sum_k w_k f(mu_k) ~ int_0^inf exp(-mu^2) f(mu) dmu,
/// exact for polynomials of degree <= 2n-1.
///
/// The recurrence coefficients come from the moment sequence
/// m_p = Gamma((p+1)/2)/2 through the Chebyshev algorithm, carried out in
/// multiprecision arithmetic because the map from moments to recurrence
/// coefficients is exponentially ill-conditioned. Nodes are the eigenvalues of
/// the Jacobi matrix, polished by Newton iteration on the recurrence.
class HalfRangeQuadrature {
 public:
  static constexpr int kMinNodes = 2;
  static constexpr int kMaxNodes = 256;
  static constexpr int kDefaultNodes = 40;

  /// Throws std::invalid_argument for n outside [2, 256] and QuadratureError
  /// if the moment matrix loses positive definiteness.
  static HalfRangeQuadrature build(int n);
  /// Same rule computed at the highest internal precision for every n; used
  /// to confirm the precision tiers of build().
  static HalfRangeQuadrature build_extended(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  int exact_degree() const { return 2 * size() - 1; }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// sum_k w_k f(mu_k).
  double integrate_half(const std::function<double(double)>& f) const;

 private:
  static HalfRangeQuadrature build_impl(int n, bool extended);
  HalfRangeQuadrature(std::vector<double> nodes, std::vector<double> weights)
      : nodes_(std::move(nodes)), weights_(std::move(weights)) {}

  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Exact half-range moment int_0^inf exp(-mu^2) mu^p dmu = Gamma((p+1)/2)/2.
double half_range_moment(int p);

/// Macroscopic perturbations carried by a distribution h at fixed x.
/// dn is delta n / n_0 and dT is delta T / T_0. u is the mass flux
/// int exp(-mu^2) mu h dmu, the normalization in which the far-field
/// coefficient of mu/sqrt(pi) in the Chapman-Enskog distribution is 2U - g_T.
struct MacroState {
  double dn = 0.0;
  double u = 0.0;
  double dT = 0.0;
};

/// Moments m_j = int exp(-mu^2) |mu| phi_j(mu) h(mu) dmu with
/// phi_0 = 1, phi_1 = mu, phi_2 = mu^2 - 1. The collision integral of the
/// speed-proportional model is m0 + mu m1 + (mu^2 - 1) m2.
struct CollisionMoments {
  double m0 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;

  double source(double mu) const { return m0 + mu * m1 + (mu * mu - 1.0) * m2; }
};

/// A velocity distribution at fixed x. Evaluated only at +mu_k and -mu_k with
/// mu_k > 0, so a jump at mu = 0 is never sampled.
using Distribution = std::function<double(double)>;

/// int_R exp(-mu^2) mu^p h(mu) dmu using the half-range rule on both half-lines.
/// Throws std::runtime_error naming the node if h returns a non-finite value.
double full_moment(const Distribution& h, const HalfRangeQuadrature& quad, int p);

MacroState macros_from_distribution(const Distribution& h, const HalfRangeQuadrature& quad);
CollisionMoments collision_moments(const Distribution& h, const HalfRangeQuadrature& quad);

/// Same functionals for a discrete distribution: plus[k] = h(+mu_k),
/// minus[k] = h(-mu_k).
MacroState macros_from_values(std::span<const double> plus, std::span<const double> minus,
                              const HalfRangeQuadrature& quad);
CollisionMoments collision_moments_from_values(std::span<const double> plus,
                                               std::span<const double> minus,
                                               const HalfRangeQuadrature& quad);

}  // namespace knudsen
