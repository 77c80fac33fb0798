// Acceptance criteria, one PASS/FAIL line per criterion. Detail lines are
// indented; lines tagged "info" never affect the verdict.
//
// Usage: acceptance [--criterion N]   (N in 1..11; default: all)

#include "knudsen/analytic_solution.hpp"
#include "knudsen/cli.hpp"
#include "knudsen/kernel_models.hpp"
#include "knudsen/published_formulas.hpp"
#include "knudsen/quadrature.hpp"
#include "knudsen/transport_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace knudsen;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void within(const std::string& what, double value, double reference, double tol) {
    const bool ok = std::isfinite(value) && std::abs(value - reference) <= tol;
    std::printf("    %s %-58s value=% .10f target=% .10f tol=%.0e\n", ok ? "ok  " : "MISS",
                what.c_str(), value, reference, tol);
    passed_ = passed_ && ok;
  }
  void below(const std::string& what, double value, double limit) {
    const bool ok = std::isfinite(value) && value <= limit;
    std::printf("    %s %-58s value=% .3e limit=%.0e\n", ok ? "ok  " : "MISS", what.c_str(), value,
                limit);
    passed_ = passed_ && ok;
  }
  void require(const std::string& what, bool ok) {
    std::printf("    %s %s\n", ok ? "ok  " : "MISS", what.c_str());
    passed_ = passed_ && ok;
  }
  void info(const std::string& what, double value) {
    std::printf("    info %-58s value=% .10f\n", what.c_str(), value);
  }
  void note(const std::string& text) { std::printf("    info %s\n", text.c_str()); }

  bool finish() const {
    std::printf("C%-2d %s  %s\n", id_, passed_ ? "PASS" : "FAIL", title_.c_str());
    return passed_;
  }

 private:
  int id_;
  std::string title_;
  bool passed_ = true;
};

const HalfRangeQuadrature& quad40() {
  static const HalfRangeQuadrature q = HalfRangeQuadrature::build(40);
  return q;
}

std::vector<double> test_mu() {
  std::vector<double> mu;
  for (int i = 1; i <= 30; ++i) {
    mu.push_back(0.1 * i);
    mu.push_back(-0.1 * i);
  }
  return mu;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "knudsen-halfspace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  if (cli::run(static_cast<int>(argv.size()), argv.data(), out, err) != 0) {
    throw std::runtime_error("cli failed: " + err.str());
  }
  return out.str();
}

bool c1() {
  Criterion c(1, "decay rate gamma0");
  c.within("gamma0 vs 0.99083", gamma0(), 0.99083, 5e-5);
  return c.finish();
}

bool c2() {
  Criterion c(2, "analytic jump coefficients vs published values");
  const JumpCoefficients t = jump_coefficients({1.0, 0.0});
  const JumpCoefficients e = jump_coefficients({0.0, 0.5});
  c.within("eps_T(g_T=1, U=0)", t.eps_T, 1.5046, 1e-4);
  c.within("eps_T(g_T=0, 2U=1)", e.eps_T, -0.5046, 1e-4);
  c.within("eps_n(g_T=1, U=0)", t.eps_n, -0.7477, 1e-4);
  c.within("eps_n(g_T=0, 2U=1)", e.eps_n, -0.2523, 1e-4);
  c.note("the published values follow from a layer mode that does not satisfy the equation;");
  c.note("see C4 and C3 for the closed form that does and its numerical confirmation");
  return c.finish();
}

bool c3() {
  Criterion c(3, "numerical rediscovery of the jumps (L=25, nx=2000, n_mu=40)");
  SolverConfig cfg;
  cfg.L = 25.0;
  cfg.nx = 2000;
  cfg.n_mu = 40;
  struct Case {
    BoundaryDrive drive;
    const char* tag;
    double eps_T, eps_n;
  };
  for (const Case& k : {Case{{1.0, 0.0}, "g_T=1, U=0", 1.5046, -0.7477},
                        Case{{0.0, 0.5}, "g_T=0, 2U=1", -0.5046, -0.2523}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const NumericField f = solve(k.drive, cfg, quad40());
    const ExtractedAsymptotics ex = extract_asymptotics(f, cfg, quad40());
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string tag = k.tag;
    c.within("eps_T_hat(" + tag + ") vs published", ex.eps_T_hat, k.eps_T, 1e-3);
    c.within("eps_n_hat(" + tag + ") vs published", ex.eps_n_hat, k.eps_n, 1e-3);
    c.require("gamma_hat(" + tag + ") available", ex.gamma_hat.has_value());
    if (ex.gamma_hat) c.within("gamma_hat(" + tag + ") vs 0.9908", *ex.gamma_hat, 0.9908, 5e-3);
    c.below("runtime seconds (" + tag + ")", seconds, 60.0);
    const JumpCoefficients j = jump_coefficients(k.drive);
    c.info("eps_T_hat - closed form (" + tag + ")", ex.eps_T_hat - j.eps_T);
    c.info("eps_n_hat - closed form (" + tag + ")", ex.eps_n_hat - j.eps_n);
    c.info("iterations (" + tag + ")", f.iterations);
  }
  return c.finish();
}

bool c4() {
  Criterion c(4, "closed-form residual and wall condition");
  double res = 0.0, wall = 0.0;
  for (const BoundaryDrive& d :
       {BoundaryDrive{1.0, 0.0}, BoundaryDrive{0.0, 0.5}, BoundaryDrive{1.0, 0.5}, BoundaryDrive{0.3, -0.2}}) {
    const AnalyticSolution sol(d);
    for (double x : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      for (double mu : test_mu()) res = std::max(res, std::abs(residual(sol, x, mu, quad40())));
    }
    for (double mu : test_mu()) {
      if (mu > 0) wall = std::max(wall, std::abs(sol.h(0.0, mu)));
    }
    wall = std::max(wall, std::abs(sol.h(0.0, 0.0, Side::Plus)));
  }
  c.below("max |sign(mu) dh/dx + h - S| on test grid", res, 1e-10);
  c.below("max |h(0, mu > 0)|", wall, 1e-12);
  return c.finish();
}

bool c5() {
  Criterion c(5, "density layer coefficient c_n");
  // dn = eps_n - g_T x - c_n (2U - g_T) e^{-gamma0 x}; unit layer drive at x = 0.
  const LayerCoefficients q = layer_coefficients_by_quadrature(quad40());
  const double c_n = -q.density;
  c.within("c_n from quadrature of the closed form", c_n, 0.0317, 1e-4);
  c.info("|c_n|", std::abs(c_n));
  c.info("published closed-form expression", published::density_layer_expression());
  return c.finish();
}

bool c6() {
  Criterion c(6, "temperature layer coefficient");
  // dT = eps_T + g_T x + k_T (2U - g_T) e^{-gamma0 x}.
  const LayerCoefficients q = layer_coefficients_by_quadrature(quad40());
  const double k_T = -q.temperature;
  c.within("k_T from the full-range moment of the layer term", k_T, 0.0951, 1e-4);
  const AnalyticSolution evap({0.0, 0.5});
  const double dT0 = macros_from_distribution(evap.at(0.0), quad40()).dT;
  c.within("dT(0) for 2U=1 from the distribution", dT0, -0.4096, 1e-4);
  c.info("oracle agreement: dT(0) - (eps_T + k_T)", dT0 - (evap.jumps().eps_T + k_T));
  c.info("published printed coefficient", published::kTemperatureLayer);
  c.note("the +0.0951 target is the moment of the published layer mode, which fails the");
  c.note("equation residual; the self-consistent closed form gives k_T = -1/(16 g0 (1+g0))");
  return c.finish();
}

bool c7() {
  Criterion c(7, "remarks on the temperature and evaporation distributions");
  for (double x : {0.0, 1.0, 2.0}) {
    const double jump = problem_split(x, 0.0, Side::Plus).temperature -
                        problem_split(x, 0.0, Side::Minus).temperature;
    c.within("h_T(x,+0) - h_T(x,-0) at x=" + std::to_string(x).substr(0, 3), jump, 3.0, 1e-12);
  }
  for (double x : {0.0, 1.0, 2.0}) {
    const double jump = problem_split(x, 0.0, Side::Plus).evaporation -
                        problem_split(x, 0.0, Side::Minus).evaporation;
    c.within("h_U(x,+0) - h_U(x,-0) at x=" + std::to_string(x).substr(0, 3), jump, 0.0, 1e-12);
  }
  for (double mu : {0.1, 0.5, 1.0, 2.0}) {
    c.within("h_U(0, mu=" + std::to_string(mu).substr(0, 3) + ")",
             problem_split(0.0, mu, Side::Plus).evaporation, 1.0 / (4.0 * gamma0()), 1e-12);
  }
  c.note("h_U(0, mu>0) = 1/(4 gamma0) contradicts the wall condition h(0, mu>0) = 0 of C4");
  return c.finish();
}

bool c8() {
  Criterion c(8, "mass-flux conservation u(x) = U");
  double analytic = 0.0;
  for (const BoundaryDrive& d : {BoundaryDrive{1.0, 0.0}, BoundaryDrive{0.0, 0.5}, BoundaryDrive{0.4, 0.3}}) {
    const AnalyticSolution sol(d);
    for (double x : {0.0, 0.25, 1.0, 3.0, 10.0}) {
      analytic = std::max(analytic, std::abs(macros_from_distribution(sol.at(x), quad40()).u - d.U));
    }
  }
  c.below("closed form: max |u - U|", analytic, 1e-12);
  SolverConfig cfg;
  cfg.acceleration = Acceleration::Anderson;
  double numeric = 0.0;
  for (const BoundaryDrive& d : {BoundaryDrive{1.0, 0.0}, BoundaryDrive{0.0, 0.5}}) {
    const NumericField f = solve(d, cfg, quad40());
    for (const MacroState& m : macro_profile(f, quad40())) numeric = std::max(numeric, std::abs(m.u - d.U));
  }
  c.below("numeric field (L=25, nx=2000): max |u - U|", numeric, 1e-6);
  return c.finish();
}

bool c9() {
  Criterion c(9, "kernel limits");
  const KernelCoefficients k = kernel_coefficients(0.0);
  c.require("a=0 coefficients equal (1, 2, 2, 1/2) exactly",
            k.r0 == 1.0 && k.r1 == 2.0 && k.r2 == 2.0 && k.beta == 0.5);
  auto scaled = [](double a) {
    double s = 0.0;
    for (int i = 0; i <= 60; ++i) {
      for (int j = 0; j <= 60; ++j) {
        s = std::max(s, a * kernel_limit_deviation(-3.0 + 0.1 * i, -3.0 + 0.1 * j, a));
      }
    }
    return s;
  };
  const double s2 = scaled(1e2), s3 = scaled(1e3), s4 = scaled(1e4);
  c.info("max a*deviation, a=1e2", s2);
  c.within("ratio a=1e2 / a=1e3 of max a*deviation", s2 / s3, 1.0, 0.2);
  c.within("ratio a=1e3 / a=1e4 of max a*deviation", s3 / s4, 1.0, 0.2);
  return c.finish();
}

bool c10() {
  Criterion c(10, "quadrature exactness and orthogonality");
  double worst = 0.0;
  for (int n : {8, 40, 64}) {
    const HalfRangeQuadrature q = HalfRangeQuadrature::build(n);
    for (int p = 0; p <= q.exact_degree(); ++p) {
      const double exact = half_range_moment(p);
      const double got = q.integrate_half([p](double m) { return std::pow(m, p); });
      worst = std::max(worst, std::abs(got - exact) / exact);
    }
  }
  c.below("max relative monomial error, p <= 2n-1, n in {8,40,64}", worst, 1e-12);
  const HalfRangeQuadrature q8 = HalfRangeQuadrature::build(8);
  c.below("|int e^-mu^2 (mu^2 - 1/2)|",
          std::abs(full_moment([](double m) { return m * m - 0.5; }, q8, 0)), 1e-12);
  for (double x : {0.0, 1.0, 5.0}) {
    const Distribution f = [x](double m) {
      return (m * m - 1.5) * (x - (m > 0 ? 1.0 : -1.0)) - m / std::sqrt(std::numbers::pi);
    };
    c.below("|velocity-thermal orthogonality| x=" + std::to_string(x).substr(0, 3),
            std::abs(full_moment(f, q8, 1)), 1e-12);
  }
  return c.finish();
}

bool c11() {
  Criterion c(11, "figure data: x-sets and asymptote constants");
  auto x_set = [](const std::string& problem) {
    std::vector<double> xs;
    for (const auto& row : parse_csv(run_cli({"distribution", "--problem", problem}))) {
      if (row[0] == "x") continue;
      const double x = std::stod(row[0]);
      if (xs.empty() || xs.back() != x) xs.push_back(x);
    }
    return xs;
  };
  c.require("temperature-jump distribution x-set {0, 1, 2}",
            x_set("temp-jump") == std::vector<double>{0.0, 1.0, 2.0});
  c.require("combined distribution x-set {0, 1, 2}",
            x_set("combined") == std::vector<double>{0.0, 1.0, 2.0});
  c.require("evaporation distribution x-set {0, 0.05, 0.1, 0.2}",
            x_set("evaporation") == std::vector<double>{0.0, 0.05, 0.1, 0.2});

  const auto rows = parse_csv(run_cli({"profile", "--xmax", "20", "--nx", "200"}));
  const auto& head = rows.front();
  auto col = [&](const char* name) {
    return static_cast<std::size_t>(std::find(head.begin(), head.end(), name) - head.begin());
  };
  const auto& last = rows.back();
  const double x = std::stod(last[col("x")]);
  c.within("N_T asymptote minus x", std::stod(last[col("N_T_as")]) - x, 0.7477, 1e-4);
  c.within("N_U asymptote", std::stod(last[col("N_U_as")]), 0.2523, 1e-4);
  c.info("advisory published N_U column at x=20", std::stod(last[col("advisory_published_N_U")]));
  return c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> criteria = {c1, c2, c3, c4, c5, c6,
                                                       c7, c8, c9, c10, c11};
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be in 1..%zu\n", criteria.size());
    return 2;
  }
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    try {
      if (!criteria[i]()) ++failed;
    } catch (const std::exception& e) {
      std::printf("C%-2zu FAIL  exception: %s\n", i + 1, e.what());
      ++failed;
    }
  }
  return failed == 0 ? 0 : 1;
}
