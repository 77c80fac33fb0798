#include "knudsen/transport_solver.hpp"

#include "knudsen/kernels.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

namespace knudsen {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

struct Workspace {
  std::vector<double> m0, m1, m2;
  explicit Workspace(std::size_t points) : m0(points), m1(points), m2(points) {}
  kernels::MomentFields fields() { return {m0, m1, m2}; }
  kernels::ConstMomentFields const_fields() const { return {m0, m1, m2}; }
};

NumericField empty_field(const SolverConfig& config, const HalfRangeQuadrature& quad) {
  NumericField f;
  const std::size_t points = static_cast<std::size_t>(config.nx) + 1;
  f.x.resize(points);
  for (std::size_t i = 0; i < points; ++i) f.x[i] = config.L * static_cast<double>(i) / config.nx;
  f.x.back() = config.L;
  f.mu.assign(quad.nodes().begin(), quad.nodes().end());
  f.plus.assign(points * f.mu.size(), 0.0);
  f.minus.assign(points * f.mu.size(), 0.0);
  return f;
}

void compute_moments(const NumericField& f, const HalfRangeQuadrature& quad,
                     const SolverConfig& config, Workspace& ws) {
  if (config.execution == Execution::OpenMP) {
    kernels::collision_moments_omp(f.plus, f.minus, quad.nodes(), quad.weights(), ws.fields());
  } else {
    kernels::collision_moments_serial(f.plus, f.minus, quad.nodes(), quad.weights(), ws.fields());
  }
}

void check_finite(const Workspace& ws, const NumericField& f, int iteration) {
  for (std::size_t i = 0; i < ws.m0.size(); ++i) {
    if (!std::isfinite(ws.m0[i]) || !std::isfinite(ws.m1[i]) || !std::isfinite(ws.m2[i])) {
      std::ostringstream msg;
      msg << "transport solver: non-finite collision moment at x = " << f.x[i] << " (grid point "
          << i << ") in iteration " << iteration;
      throw std::runtime_error(msg.str());
    }
  }
}

// Sweeps the field in place from the moments in ws.
void sweep(NumericField& f, const Workspace& ws, const BoundaryDrive& drive,
           const SolverConfig& config, const HalfRangeQuadrature& quad) {
  const auto step = kernels::CellPropagator::for_width(config.dx());
  const bool omp = config.execution == Execution::OpenMP;
  if (omp) {
    kernels::sweep_outgoing_omp(ws.const_fields(), f.mu, step, f.plus);
  } else {
    kernels::sweep_outgoing_serial(ws.const_fields(), f.mu, step, f.plus);
  }
  const std::size_t points = f.points();
  std::vector<double> outgoing(f.nodes());
  for (std::size_t k = 0; k < f.nodes(); ++k) outgoing[k] = f.plus[k * points + points - 1];
  const std::vector<double> incoming = far_field_closure(outgoing, drive, config.L, quad);
  if (omp) {
    kernels::sweep_incoming_omp(ws.const_fields(), f.mu, step, incoming, f.minus);
  } else {
    kernels::sweep_incoming_serial(ws.const_fields(), f.mu, step, incoming, f.minus);
  }
}

double sup_change(const NumericField& a, const NumericField& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.plus.size(); ++j) {
    d = std::max({d, std::abs(a.plus[j] - b.plus[j]), std::abs(a.minus[j] - b.minus[j])});
  }
  return d;
}

// Anderson mixing on the stacked moment vector.
class AndersonMixer {
 public:
  explicit AndersonMixer(int depth) : depth_(depth) {}

  // x: current iterate, g: G(x). Returns the next iterate.
  Eigen::VectorXd update(const Eigen::VectorXd& x, const Eigen::VectorXd& g) {
    const Eigen::VectorXd r = g - x;
    if (has_prev_) {
      dr_.push_back(r - prev_r_);
      dg_.push_back(g - prev_g_);
      if (static_cast<int>(dr_.size()) > depth_) {
        dr_.pop_front();
        dg_.pop_front();
      }
    }
    prev_r_ = r;
    prev_g_ = g;
    has_prev_ = true;
    if (dr_.empty()) return g;

    const Eigen::Index m = static_cast<Eigen::Index>(dr_.size());
    Eigen::MatrixXd DR(r.size(), m), DG(r.size(), m);
    for (Eigen::Index j = 0; j < m; ++j) {
      DR.col(j) = dr_[static_cast<std::size_t>(j)];
      DG.col(j) = dg_[static_cast<std::size_t>(j)];
    }
    const Eigen::VectorXd coef = DR.colPivHouseholderQr().solve(r);
    if (!coef.allFinite()) {
      dr_.clear();
      dg_.clear();
      return g;
    }
    return g - DG * coef;
  }

 private:
  int depth_;
  bool has_prev_ = false;
  Eigen::VectorXd prev_r_, prev_g_;
  std::deque<Eigen::VectorXd> dr_, dg_;
};

Eigen::VectorXd stack(const Workspace& ws) {
  const auto p = static_cast<Eigen::Index>(ws.m0.size());
  Eigen::VectorXd v(3 * p);
  for (Eigen::Index i = 0; i < p; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    v[i] = ws.m0[ii];
    v[p + i] = ws.m1[ii];
    v[2 * p + i] = ws.m2[ii];
  }
  return v;
}

void unstack(const Eigen::VectorXd& v, Workspace& ws) {
  const auto p = static_cast<Eigen::Index>(ws.m0.size());
  for (Eigen::Index i = 0; i < p; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    ws.m0[ii] = v[i];
    ws.m1[ii] = v[p + i];
    ws.m2[ii] = v[2 * p + i];
  }
}

struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
};

LinearFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

}  // namespace

void SolverConfig::validate() const {
  std::ostringstream msg;
  if (!(L > 0.0) || !std::isfinite(L)) msg << "L must be positive; ";
  if (nx < 64) msg << "nx must be >= 64; ";
  if (n_mu < HalfRangeQuadrature::kMinNodes || n_mu > HalfRangeQuadrature::kMaxNodes) {
    msg << "n_mu must lie in [2, 256]; ";
  }
  if (!(tol > 0.0)) msg << "tol must be positive; ";
  if (max_iter < 1) msg << "max_iter must be >= 1; ";
  if (!(0.0 <= fit_begin && fit_begin < fit_end && fit_end <= 1.0)) {
    msg << "fit window must satisfy 0 <= begin < end <= 1; ";
  }
  if (acceleration == Acceleration::Anderson && anderson_depth < 1) {
    msg << "anderson_depth must be >= 1; ";
  }
  const std::string s = msg.str();
  if (!s.empty()) throw std::invalid_argument("solver config: " + s.substr(0, s.size() - 2));
}

std::vector<std::string> SolverConfig::warnings() const {
  std::vector<std::string> w;
  if (L <= 5.0 / gamma0()) {
    w.push_back("L = " + std::to_string(L) +
                " does not exceed 5/gamma0; the Knudsen layer will not have decayed at the far end");
  }
  return w;
}

std::vector<double> NumericField::plus_at(std::size_t i) const {
  std::vector<double> v(nodes());
  for (std::size_t k = 0; k < nodes(); ++k) v[k] = plus[k * points() + i];
  return v;
}

std::vector<double> NumericField::minus_at(std::size_t i) const {
  std::vector<double> v(nodes());
  for (std::size_t k = 0; k < nodes(); ++k) v[k] = minus[k * points() + i];
  return v;
}

std::vector<double> far_field_closure(std::span<const double> outgoing_at_L,
                                      const BoundaryDrive& drive, double L,
                                      const HalfRangeQuadrature& quad) {
  const auto mu = quad.nodes();
  const auto w = quad.weights();
  const double a1 = drive.layer_drive() / kSqrtPi;
  auto known = [&](double m, double s) { return a1 * m + drive.g_T * (m * m - 1.5) * (L - s); };

  // Weighted least squares for A0, A2 on the basis {1, mu^2 - 1/2}, weight w mu.
  double g00 = 0.0, g01 = 0.0, g11 = 0.0, b0 = 0.0, b1 = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double wt = w[k] * mu[k];
    const double e = mu[k] * mu[k] - 0.5;
    const double r = outgoing_at_L[k] - known(mu[k], 1.0);
    g00 += wt;
    g01 += wt * e;
    g11 += wt * e * e;
    b0 += wt * r;
    b1 += wt * e * r;
  }
  const double det = g00 * g11 - g01 * g01;
  const double A0 = (b0 * g11 - b1 * g01) / det;
  const double A2 = (g00 * b1 - g01 * b0) / det;

  std::vector<double> incoming(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) {
    const double m = -mu[k];
    incoming[k] = A0 + A2 * (m * m - 0.5) + known(m, -1.0);
  }
  return incoming;
}

NumericField solve(const BoundaryDrive& drive, const SolverConfig& config) {
  config.validate();
  return solve(drive, config, HalfRangeQuadrature::build(config.n_mu));
}

NumericField solve(const BoundaryDrive& drive, const SolverConfig& config,
                   const HalfRangeQuadrature& quad) {
  config.validate();
  if (quad.size() != config.n_mu) {
    throw std::invalid_argument("solve: quadrature size does not match config.n_mu");
  }
  NumericField field = empty_field(config, quad);
  NumericField next = field;
  Workspace ws(field.points());
  compute_moments(field, quad, config, ws);

  std::optional<AndersonMixer> mixer;
  if (config.acceleration == Acceleration::Anderson) mixer.emplace(config.anderson_depth);

  for (int it = 1; it <= config.max_iter; ++it) {
    check_finite(ws, field, it);
    sweep(next, ws, drive, config, quad);
    const double change = sup_change(next, field);
    std::swap(field, next);
    field.history.swap(next.history);
    field.history.push_back(change);
    field.iterations = it;
    field.residual_norm = change;
    if (!std::isfinite(change)) {
      throw std::runtime_error("transport solver: non-finite field in iteration " +
                               std::to_string(it));
    }
    if (change < config.tol) {
      field.converged = true;
      return field;
    }
    if (mixer) {
      const Eigen::VectorXd x = stack(ws);
      compute_moments(field, quad, config, ws);
      unstack(mixer->update(x, stack(ws)), ws);
    } else {
      compute_moments(field, quad, config, ws);
    }
  }
  std::ostringstream msg;
  msg << "transport solver did not converge in " << config.max_iter
      << " iterations (last sup-norm change " << field.residual_norm << ", tol " << config.tol
      << ")";
  throw ConvergenceError(msg.str(), std::move(field));
}

NumericField source_iteration_step(const NumericField& field, const BoundaryDrive& drive,
                                   const SolverConfig& config, const HalfRangeQuadrature& quad) {
  Workspace ws(field.points());
  compute_moments(field, quad, config, ws);
  check_finite(ws, field, 1);
  NumericField next = field;
  next.history.clear();
  sweep(next, ws, drive, config, quad);
  next.iterations = 1;
  next.residual_norm = sup_change(next, field);
  next.history.push_back(next.residual_norm);
  next.converged = next.residual_norm < config.tol;
  return next;
}

NumericField sample_analytic(const AnalyticSolution& solution, const SolverConfig& config,
                             const HalfRangeQuadrature& quad) {
  NumericField f = empty_field(config, quad);
  const std::size_t points = f.points();
  for (std::size_t k = 0; k < f.nodes(); ++k) {
    for (std::size_t i = 0; i < points; ++i) {
      f.plus[k * points + i] = solution.h(f.x[i], f.mu[k], Side::Plus);
      f.minus[k * points + i] = solution.h(f.x[i], -f.mu[k], Side::Minus);
    }
  }
  return f;
}

std::vector<MacroState> macro_profile(const NumericField& field, const HalfRangeQuadrature& quad) {
  std::vector<MacroState> out(field.points());
  for (std::size_t i = 0; i < field.points(); ++i) {
    out[i] = macros_from_values(field.plus_at(i), field.minus_at(i), quad);
  }
  return out;
}

ExtractedAsymptotics extract_asymptotics(const NumericField& field, const SolverConfig& config,
                                         const HalfRangeQuadrature& quad) {
  if (!field.converged) {
    throw std::invalid_argument("extract_asymptotics: field is not converged");
  }
  const std::vector<MacroState> macros = macro_profile(field, quad);
  const double L = field.x.back();
  std::vector<double> xs, dT, dn;
  for (std::size_t i = 0; i < field.points(); ++i) {
    const double x = field.x[i];
    if (x >= config.fit_begin * L && x <= config.fit_end * L) {
      xs.push_back(x);
      dT.push_back(macros[i].dT);
      dn.push_back(macros[i].dn);
    }
  }
  if (xs.size() < 3) {
    throw std::invalid_argument("extract_asymptotics: fit window holds fewer than 3 grid points");
  }
  const LinearFit fit_T = least_squares_line(xs, dT);
  const LinearFit fit_n = least_squares_line(xs, dn);

  ExtractedAsymptotics out;
  out.eps_T_hat = fit_T.intercept;
  out.slope_T_hat = fit_T.slope;
  out.eps_n_hat = fit_n.intercept;
  out.slope_n_hat = fit_n.slope;
  out.fit_points = static_cast<int>(xs.size());

  const double floor = std::max(1e-9, 1e3 * config.tol);
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < field.points() && field.x[i] <= 0.25 * L; ++i) {
    const double r = macros[i].dT - (fit_T.intercept + fit_T.slope * field.x[i]);
    if (std::abs(r) > floor) {
      lx.push_back(field.x[i]);
      ly.push_back(std::log(std::abs(r)));
    }
  }
  out.layer_points = static_cast<int>(lx.size());
  if (lx.size() >= 8) out.gamma_hat = -least_squares_line(lx, ly).slope;
  return out;
}

ComparisonReport compare_to_analytic(const NumericField& field, const BoundaryDrive& drive,
                                     const SolverConfig& config, const HalfRangeQuadrature& quad) {
  const AnalyticSolution sol(drive);
  ComparisonReport r;
  double sum2 = 0.0;
  const std::size_t points = field.points();
  for (std::size_t k = 0; k < field.nodes(); ++k) {
    for (std::size_t i = 0; i < points; ++i) {
      const double dp = field.plus[k * points + i] - sol.h(field.x[i], field.mu[k], Side::Plus);
      const double dm = field.minus[k * points + i] - sol.h(field.x[i], -field.mu[k], Side::Minus);
      r.sup_diff = std::max({r.sup_diff, std::abs(dp), std::abs(dm)});
      sum2 += dp * dp + dm * dm;
    }
  }
  r.rms_diff = std::sqrt(sum2 / static_cast<double>(2 * points * field.nodes()));
  if (field.converged) {
    const ExtractedAsymptotics ex = extract_asymptotics(field, config, quad);
    r.eps_T_delta = ex.eps_T_hat - sol.jumps().eps_T;
    r.eps_n_delta = ex.eps_n_hat - sol.jumps().eps_n;
  }
  return r;
}

double residual(const FieldEvaluator& h, double x, double mu, const HalfRangeQuadrature& quad) {
  double derivative = 0.0;
  if (h.dx) {
    derivative = h.dx(x, mu);
  } else {
    const double step = 1e-4;
    derivative = x >= step ? (h.value(x + step, mu) - h.value(x - step, mu)) / (2.0 * step)
                           : (h.value(x + step, mu) - h.value(x, mu)) / step;
  }
  const Distribution at_x = [&h, x](double m) { return h.value(x, m); };
  const CollisionMoments m = collision_moments(at_x, quad);
  const double s = mu > 0.0 ? 1.0 : -1.0;
  return s * derivative + h.value(x, mu) - m.source(mu);
}

double residual(const AnalyticSolution& h, double x, double mu, const HalfRangeQuadrature& quad) {
  FieldEvaluator e;
  e.value = [&h](double xx, double m) { return h.h(xx, m); };
  e.dx = [&h](double xx, double m) { return h.dh_dx(xx, m, m > 0.0 ? Side::Plus : Side::Minus); };
  return residual(e, x, mu, quad);
}

double residual(const NumericField& field, std::size_t i, std::size_t k, Side side,
                const HalfRangeQuadrature& quad) {
  // Cell-centred balance on the cell behind point i in the sweep direction:
  //   (h_i - h_up)/dx + (h_i + h_up)/2 - (S_i + S_up)/2.
  const bool plus = side == Side::Plus;
  if ((plus && i == 0) || (!plus && i + 1 >= field.points())) {
    throw std::out_of_range("residual: no upwind neighbour at this grid point");
  }
  const std::size_t up = plus ? i - 1 : i + 1;
  const double dx = std::abs(field.x[i] - field.x[up]);
  const double mu = plus ? field.mu[k] : -field.mu[k];
  const CollisionMoments mi = collision_moments_from_values(field.plus_at(i), field.minus_at(i), quad);
  const CollisionMoments mu_up =
      collision_moments_from_values(field.plus_at(up), field.minus_at(up), quad);
  const double hi = field.value(i, k, side);
  const double hu = field.value(up, k, side);
  return (hi - hu) / dx + 0.5 * (hi + hu) - 0.5 * (mi.source(mu) + mu_up.source(mu));
}

}  // namespace knudsen
