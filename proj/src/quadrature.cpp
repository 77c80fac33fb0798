#include "knudsen/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace knudsen {

namespace {

namespace mp = boost::multiprecision;

// Decimal digits needed by the Chebyshev algorithm grow roughly linearly with
// the node count; the tiers leave a wide margin (checked against the next tier
// in the unit tests).
using Real150 = mp::number<mp::cpp_bin_float<150>>;
using Real600 = mp::number<mp::cpp_bin_float<600>>;

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

template <class Real>
struct Recurrence {
  std::vector<Real> alpha;
  std::vector<Real> beta;
};

// Chebyshev algorithm: monic recurrence coefficients from ordinary moments.
template <class Real>
Recurrence<Real> recurrence_from_moments(int n) {
  const int nm = 2 * n;
  std::vector<Real> mom(nm);
  mom[0] = boost::math::constants::root_pi<Real>() / 2;
  mom[1] = Real(1) / 2;
  for (int p = 2; p < nm; ++p) mom[p] = mom[p - 2] * Real(p - 1) / 2;

  Recurrence<Real> rec;
  rec.alpha.assign(n, Real(0));
  rec.beta.assign(n, Real(0));
  rec.alpha[0] = mom[1] / mom[0];
  rec.beta[0] = mom[0];

  std::vector<Real> sigma_prev2(nm, Real(0));
  std::vector<Real> sigma_prev(mom);
  std::vector<Real> sigma(nm, Real(0));
  for (int k = 1; k < n; ++k) {
    for (int l = k; l < nm - k; ++l) {
      sigma[l] = sigma_prev[l + 1] - rec.alpha[k - 1] * sigma_prev[l] -
                 rec.beta[k - 1] * sigma_prev2[l];
    }
    if (!(sigma[k] > 0)) {
      std::ostringstream msg;
      msg << "half-range quadrature: moment matrix not positive definite at degree " << k;
      throw QuadratureError(msg.str(), k);
    }
    rec.alpha[k] = sigma[k + 1] / sigma[k] - sigma_prev[k] / sigma_prev[k - 1];
    rec.beta[k] = sigma[k] / sigma_prev[k - 1];
    sigma_prev2.swap(sigma_prev);
    sigma_prev.swap(sigma);
  }
  return rec;
}

template <class Real>
Rule build_rule(int n) {
  const Recurrence<Real> rec = recurrence_from_moments<Real>(n);

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = static_cast<double>(rec.alpha[k]);
  for (int k = 1; k < n; ++k) sub[k - 1] = static_cast<double>(mp::sqrt(rec.beta[k]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw QuadratureError("half-range quadrature: Jacobi eigenvalue solve failed", n);
  }

  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int j = 0; j < n; ++j) {
    Real x = eig.eigenvalues()[j];
    // Newton polish on the monic recurrence; the double eigenvalue is already
    // within a few ulps so a handful of steps suffices.
    for (int it = 0; it < 8; ++it) {
      Real p_prev = 0, p = 1, dp_prev = 0, dp = 0;
      for (int k = 0; k < n; ++k) {
        const Real p_next = (x - rec.alpha[k]) * p - rec.beta[k] * p_prev;
        const Real dp_next = p + (x - rec.alpha[k]) * dp - rec.beta[k] * dp_prev;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
      }
      x -= p / dp;
    }
    // Christoffel number: w = 1 / sum_k pi_k(x)^2 / ||pi_k||^2,
    // ||pi_k||^2 = beta_0 beta_1 ... beta_k.
    Real p_prev = 0, p = 1, norm = rec.beta[0];
    Real sum = p * p / norm;
    for (int k = 0; k + 1 < n; ++k) {
      const Real p_next = (x - rec.alpha[k]) * p - rec.beta[k] * p_prev;
      p_prev = p;
      p = p_next;
      norm *= rec.beta[k + 1];
      sum += p * p / norm;
    }
    rule.nodes[j] = static_cast<double>(x);
    rule.weights[j] = static_cast<double>(1 / sum);
  }
  return rule;
}

}  // namespace

HalfRangeQuadrature HalfRangeQuadrature::build(int n) { return build_impl(n, false); }

HalfRangeQuadrature HalfRangeQuadrature::build_extended(int n) { return build_impl(n, true); }

HalfRangeQuadrature HalfRangeQuadrature::build_impl(int n, bool extended) {
  if (n < kMinNodes || n > kMaxNodes) {
    throw std::invalid_argument("half-range quadrature: node count must lie in [2, 256], got " +
                                std::to_string(n));
  }
  Rule rule = (n <= 64 && !extended) ? build_rule<Real150>(n) : build_rule<Real600>(n);
  for (int k = 0; k < n; ++k) {
    const bool increasing = k == 0 || rule.nodes[k] > rule.nodes[k - 1];
    if (!(rule.nodes[k] > 0.0) || !(rule.weights[k] > 0.0) || !increasing) {
      throw QuadratureError("half-range quadrature: invalid node or weight at index " +
                                std::to_string(k),
                            n);
    }
  }
  return HalfRangeQuadrature(std::move(rule.nodes), std::move(rule.weights));
}

double HalfRangeQuadrature::integrate_half(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) sum += weights_[k] * f(nodes_[k]);
  return sum;
}

double half_range_moment(int p) {
  if (p < 0) throw std::domain_error("half_range_moment: p must be >= 0");
  return 0.5 * std::tgamma(0.5 * (p + 1));
}

namespace {

double checked(double v, double mu) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "distribution evaluated to a non-finite value at mu = " << mu;
    throw std::runtime_error(msg.str());
  }
  return v;
}

}  // namespace

double full_moment(const Distribution& h, const HalfRangeQuadrature& quad, int p) {
  const auto nodes = quad.nodes();
  const auto weights = quad.weights();
  const double odd = (p % 2 == 0) ? 1.0 : -1.0;
  double sum = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double mu = nodes[k];
    const double mp = std::pow(mu, p);
    sum += weights[k] * mp * (checked(h(mu), mu) + odd * checked(h(-mu), -mu));
  }
  return sum;
}

MacroState macros_from_distribution(const Distribution& h, const HalfRangeQuadrature& quad) {
  const auto nodes = quad.nodes();
  std::vector<double> plus(nodes.size()), minus(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    plus[k] = checked(h(nodes[k]), nodes[k]);
    minus[k] = checked(h(-nodes[k]), -nodes[k]);
  }
  return macros_from_values(plus, minus, quad);
}

CollisionMoments collision_moments(const Distribution& h, const HalfRangeQuadrature& quad) {
  const auto nodes = quad.nodes();
  std::vector<double> plus(nodes.size()), minus(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    plus[k] = checked(h(nodes[k]), nodes[k]);
    minus[k] = checked(h(-nodes[k]), -nodes[k]);
  }
  return collision_moments_from_values(plus, minus, quad);
}

MacroState macros_from_values(std::span<const double> plus, std::span<const double> minus,
                              const HalfRangeQuadrature& quad) {
  const auto nodes = quad.nodes();
  const auto weights = quad.weights();
  if (plus.size() != nodes.size() || minus.size() != nodes.size()) {
    throw std::invalid_argument("macros_from_values: value count does not match the quadrature");
  }
  double i0 = 0.0, i1 = 0.0, i2 = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double mu = nodes[k];
    const double even = plus[k] + minus[k];
    i0 += weights[k] * even;
    i1 += weights[k] * mu * (plus[k] - minus[k]);
    i2 += weights[k] * mu * mu * even;
  }
  const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
  MacroState s;
  s.dn = inv_sqrt_pi * i0;
  s.u = i1;
  s.dT = 2.0 * inv_sqrt_pi * (i2 - 0.5 * i0);
  return s;
}

CollisionMoments collision_moments_from_values(std::span<const double> plus,
                                               std::span<const double> minus,
                                               const HalfRangeQuadrature& quad) {
  const auto nodes = quad.nodes();
  const auto weights = quad.weights();
  if (plus.size() != nodes.size() || minus.size() != nodes.size()) {
    throw std::invalid_argument(
        "collision_moments_from_values: value count does not match the quadrature");
  }
  CollisionMoments m;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double mu = nodes[k];
    const double wm = weights[k] * mu;
    const double even = plus[k] + minus[k];
    m.m0 += wm * even;
    m.m1 += wm * mu * (plus[k] - minus[k]);
    m.m2 += wm * (mu * mu - 1.0) * even;
  }
  return m;
}

}  // namespace knudsen
