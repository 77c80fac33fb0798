#include "knudsen/transport_solver.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace knudsen;

namespace {

SolverConfig reference_config() {
  SolverConfig c;
  c.L = 25.0;
  c.nx = 2000;
  c.n_mu = 40;
  c.tol = 1e-12;
  c.acceleration = Acceleration::Anderson;
  return c;
}

const HalfRangeQuadrature& quad(int n) {
  static std::map<int, HalfRangeQuadrature> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, HalfRangeQuadrature::build(n)).first;
  return it->second;
}

}  // namespace

TEST_SUITE("transport_solver") {

TEST_CASE("config validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.nx = 10;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SolverConfig{};
  c.L = -1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SolverConfig{};
  c.fit_begin = 0.9;
  c.fit_end = 0.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SolverConfig{};
  c.n_mu = 1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = SolverConfig{};
  CHECK(c.warnings().empty());
  c.L = 4.0;
  CHECK(c.warnings().size() == 1);
}

TEST_CASE("zero drive converges in one iteration to zero") {
  SolverConfig c = reference_config();
  c.acceleration = Acceleration::None;
  const NumericField f = solve({0.0, 0.0}, c, quad(40));
  CHECK(f.converged);
  CHECK(f.iterations == 1);
  CHECK(std::all_of(f.plus.begin(), f.plus.end(), [](double v) { return v == 0.0; }));
  CHECK(std::all_of(f.minus.begin(), f.minus.end(), [](double v) { return v == 0.0; }));
  const ComparisonReport r = compare_to_analytic(f, {0.0, 0.0}, c, quad(40));
  CHECK(r.sup_diff == 0.0);
}

TEST_CASE("reference configuration reproduces the closed-form jumps") {
  const SolverConfig c = reference_config();
  struct Case {
    BoundaryDrive drive;
    double slope_T, slope_n;
  };
  for (const Case& k : {Case{{1.0, 0.0}, 1.0, -1.0}, Case{{0.0, 0.5}, 0.0, 0.0}}) {
    const NumericField f = solve(k.drive, c, quad(40));
    REQUIRE(f.converged);
    const ExtractedAsymptotics ex = extract_asymptotics(f, c, quad(40));
    const JumpCoefficients j = jump_coefficients(k.drive);
    CHECK(std::abs(ex.eps_T_hat - j.eps_T) < 1e-6);
    CHECK(std::abs(ex.eps_n_hat - j.eps_n) < 1e-6);
    CHECK(std::abs(ex.slope_T_hat - k.slope_T) < 1e-3);
    CHECK(std::abs(ex.slope_n_hat - k.slope_n) < 1e-3);
    REQUIRE(ex.gamma_hat.has_value());
    CHECK(std::abs(*ex.gamma_hat - gamma0()) < 5e-3);
    const ComparisonReport r = compare_to_analytic(f, k.drive, c, quad(40));
    CHECK(r.sup_diff < 5e-3);
    CHECK(r.rms_diff <= r.sup_diff);
    CHECK(std::abs(r.eps_T_delta) < 1e-6);
  }
}

TEST_CASE("mass flux is conserved across the domain") {
  const SolverConfig c = reference_config();
  for (const BoundaryDrive& d : {BoundaryDrive{1.0, 0.0}, BoundaryDrive{0.0, 0.5}}) {
    const NumericField f = solve(d, c, quad(40));
    for (const MacroState& m : macro_profile(f, quad(40))) REQUIRE(std::abs(m.u - d.U) < 1e-6);
  }
}

TEST_CASE("degenerate drive 2U = g_T has no layer") {
  const SolverConfig c = reference_config();
  const NumericField f = solve({1.0, 0.5}, c, quad(40));
  const ExtractedAsymptotics ex = extract_asymptotics(f, c, quad(40));
  CHECK_FALSE(ex.gamma_hat.has_value());
  CHECK(ex.eps_T_hat == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(ex.eps_n_hat == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(compare_to_analytic(f, {1.0, 0.5}, c, quad(40)).sup_diff < 1e-8);
}

TEST_CASE("grid independence of the extracted jump") {
  SolverConfig c = reference_config();
  const BoundaryDrive d{1.0, 0.0};
  const double base = extract_asymptotics(solve(d, c, quad(40)), c, quad(40)).eps_T_hat;
  c.nx = 4000;
  const double fine_x = extract_asymptotics(solve(d, c, quad(40)), c, quad(40)).eps_T_hat;
  c.nx = 2000;
  c.n_mu = 80;
  const double fine_mu = extract_asymptotics(solve(d, c, quad(80)), c, quad(80)).eps_T_hat;
  CHECK(std::abs(fine_x - base) < 1e-4);
  CHECK(std::abs(fine_mu - base) < 1e-4);
}

TEST_CASE("refinement reduces the error at least by half per doubling") {
  SolverConfig c = reference_config();
  const BoundaryDrive d{1.0, 0.0};
  std::vector<double> err;
  for (int nx : {250, 500, 1000}) {
    c.nx = nx;
    err.push_back(compare_to_analytic(solve(d, c, quad(40)), d, c, quad(40)).sup_diff);
  }
  CHECK(err[0] / err[1] > 2.0);
  CHECK(err[1] / err[2] > 2.0);
  // The scheme is second order in practice.
  CHECK(err[1] / err[2] > 3.5);
}

TEST_CASE("the closed form is a fixed point up to discretization error") {
  const SolverConfig c = reference_config();
  const BoundaryDrive d{1.0, 0.0};
  const double disc = compare_to_analytic(solve(d, c, quad(40)), d, c, quad(40)).sup_diff;
  const NumericField exact = sample_analytic(AnalyticSolution(d), c, quad(40));
  const NumericField once = source_iteration_step(exact, d, c, quad(40));
  CHECK(once.residual_norm <= 10.0 * disc);
}

TEST_CASE("plain iteration error decreases monotonically after the transient") {
  SolverConfig c;
  c.L = 20.0;
  c.nx = 200;
  c.n_mu = 16;
  c.tol = 1e-10;
  const NumericField f = solve({1.0, 0.0}, c, quad(16));
  REQUIRE(f.converged);
  const std::size_t transient = 10;
  for (std::size_t i = transient + 1; i < f.history.size(); ++i) {
    REQUIRE(f.history[i] <= f.history[i - 1]);
  }
}

TEST_CASE("Anderson and plain iteration agree") {
  SolverConfig c;
  c.L = 20.0;
  c.nx = 400;
  c.n_mu = 16;
  c.tol = 1e-11;
  const BoundaryDrive d{0.6, -0.1};
  const NumericField plain = solve(d, c, quad(16));
  c.acceleration = Acceleration::Anderson;
  const NumericField fast = solve(d, c, quad(16));
  CHECK(fast.iterations < plain.iterations);
  double diff = 0.0;
  for (std::size_t j = 0; j < plain.plus.size(); ++j) {
    diff = std::max({diff, std::abs(plain.plus[j] - fast.plus[j]),
                     std::abs(plain.minus[j] - fast.minus[j])});
  }
  CHECK(diff < 1e-8);
}

TEST_CASE("serial and OpenMP execution are bitwise identical") {
  SolverConfig c;
  c.L = 20.0;
  c.nx = 300;
  c.n_mu = 24;
  c.acceleration = Acceleration::Anderson;
  c.execution = Execution::Serial;
  const NumericField a = solve({1.0, 0.3}, c, quad(24));
  c.execution = Execution::OpenMP;
  const NumericField b = solve({1.0, 0.3}, c, quad(24));
  CHECK(a.iterations == b.iterations);
  CHECK(a.plus == b.plus);
  CHECK(a.minus == b.minus);
}

TEST_CASE("discontinuity at mu = 0 under node refinement") {
  SolverConfig c = reference_config();
  c.nx = 1000;
  const BoundaryDrive d{1.0, 0.0};
  const AnalyticSolution sol(d);
  for (int n : {40, 160}) {
    c.n_mu = n;
    const NumericField f = solve(d, c, quad(n));
    for (double x : {0.0, 1.0, 5.0}) {
      const auto i = static_cast<std::size_t>(std::lround(x / c.dx()));
      const double jump = f.value(i, 0, Side::Plus) - f.value(i, 0, Side::Minus);
      CHECK(jump == doctest::Approx(sol.discontinuity(x)).epsilon(n == 40 ? 5e-3 : 1e-3));
    }
    // Away from the wall the jump is 3 g_T.
    const auto i5 = static_cast<std::size_t>(std::lround(5.0 / c.dx()));
    CHECK(f.value(i5, 0, Side::Plus) - f.value(i5, 0, Side::Minus) ==
          doctest::Approx(3.0).epsilon(0.02));
  }
}

TEST_CASE("non-convergence carries the iteration history") {
  SolverConfig c;
  c.nx = 100;
  c.max_iter = 5;
  try {
    solve({1.0, 0.0}, c, quad(40));
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.history().size() == 5);
    CHECK(e.field().iterations == 5);
    CHECK_FALSE(e.field().converged);
  }
}

TEST_CASE("non-finite input is detected with its location") {
  SolverConfig c;
  c.nx = 100;
  c.n_mu = 8;
  NumericField f = sample_analytic(AnalyticSolution({1.0, 0.0}), c, quad(8));
  f.plus[3 * f.points() + 17] = std::nan("");
  try {
    source_iteration_step(f, {1.0, 0.0}, c, quad(8));
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("grid point 17") != std::string::npos);
  }
}

TEST_CASE("far-field closure is exact on Chapman-Enskog data") {
  const BoundaryDrive d{0.8, 0.25};
  const AnalyticSolution sol(d);
  const double L = 30.0;
  std::vector<double> out;
  for (double m : quad(24).nodes()) out.push_back(sol.chapman_enskog(L, m, Side::Plus));
  const std::vector<double> in = far_field_closure(out, d, L, quad(24));
  for (std::size_t k = 0; k < in.size(); ++k) {
    CHECK(in[k] == doctest::Approx(sol.chapman_enskog(L, -quad(24).nodes()[k], Side::Minus)).epsilon(1e-12));
  }
}

TEST_CASE("discrete residual of the converged field is small") {
  SolverConfig c = reference_config();
  const NumericField f = solve({1.0, 0.0}, c, quad(40));
  double worst = 0.0;
  for (std::size_t k = 0; k < f.nodes(); k += 7) {
    for (std::size_t i = 1; i + 1 < f.points(); i += 97) {
      worst = std::max({worst, std::abs(residual(f, i, k, Side::Plus, quad(40))),
                        std::abs(residual(f, i, k, Side::Minus, quad(40)))});
    }
  }
  CHECK(worst < 1e-3);
  CHECK_THROWS_AS(residual(f, 0, 0, Side::Plus, quad(40)), std::out_of_range);
}

TEST_CASE("underpopulated fit window") {
  SolverConfig c;
  c.nx = 64;
  c.n_mu = 8;
  c.fit_begin = 0.50;
  c.fit_end = 0.51;
  const NumericField f = solve({0.0, 0.0}, c, quad(8));
  CHECK_THROWS_AS(extract_asymptotics(f, c, quad(8)), std::invalid_argument);
}

}
