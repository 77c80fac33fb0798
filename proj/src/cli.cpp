#include "knudsen/cli.hpp"

#include "knudsen/published_formulas.hpp"
#include "knudsen/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#ifndef KNUDSEN_VERSION
#define KNUDSEN_VERSION "0.0.0"
#endif

namespace knudsen::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string format = "csv";
  std::string out;
  std::string config;
  double gT = 0.0;
  double U = 0.0;
  // profile
  double xmax = 20.0;
  int points = 200;
  // distribution
  std::string problem = "temp-jump";
  std::vector<double> x;
  double mu_min = -3.0;
  double mu_max = 3.0;
  int mu_count = 61;
  // solve
  SolverConfig solver;
  std::string acceleration = "none";
  std::string execution = "openmp";
  int stride = 10;
  std::string summary;
  // verify
  double gamma_perturbation = 0.0;
  bool skip_solver = false;
};

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place at " + path + ": " + ec.message());
  }
}

std::string csv_header_line() { return std::string("# knudsen-halfspace v") + version() + "\n"; }

std::string side_tag(Side s) { return s == Side::Plus ? "+" : "-"; }

// Config file keys are the long flag names without dashes. Each present key
// is applied unless the flag was also given on the command line.
void apply_config(CLI::App& sub, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file " + path + " must hold a JSON object");
  for (const auto& [key, value] : doc.items()) {
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw UsageError("config file " + path + ": unknown key '" + key + "' for subcommand " +
                       sub.get_name());
    }
    if (opt->count() > 0) continue;
    std::vector<json> items = value.is_array() ? value.get<std::vector<json>>() : std::vector<json>{value};
    for (const json& item : items) {
      if (item.is_string()) {
        opt->add_result(item.get<std::string>());
      } else if (item.is_number() || item.is_boolean()) {
        std::string s = item.dump();
        if (item.is_boolean()) s = item.get<bool>() ? "true" : "false";
        opt->add_result(s);
      } else {
        throw UsageError("config file " + path + ": key '" + key + "' has an unsupported value");
      }
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config file " + path + ": key '" + key + "': " + e.what());
    }
  }
}

void add_format_out(CLI::App* sub, Settings& s) {
  sub->add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", s.out, "Output file (default: standard output)");
  sub->add_option("--config", s.config, "Flat JSON file of flag values; flags win");
}

void add_drive(CLI::App* sub, Settings& s) {
  sub->add_option("--gT", s.gT, "Far-field temperature gradient g_T")->capture_default_str();
  sub->add_option("--U", s.U, "Evaporation velocity U")->capture_default_str();
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw UsageError(std::string(name) + " must be finite");
}

// ---- jumps ---------------------------------------------------------------

std::string cmd_jumps(const Settings& s) {
  const JumpReport r = jump_report({s.gT, s.U});
  if (s.format == "json") return to_json(r) + "\n";
  std::ostringstream o;
  o << csv_header_line();
  o << "g_T,U,eps_T,eps_n,dEpsT_dgT,dEpsT_d2U,dEpsn_dgT,dEpsn_d2U,"
       "advisory_published_eps_T,advisory_published_eps_n\n";
  o << csv_number(s.gT) << ',' << csv_number(s.U) << ',' << csv_number(r.jumps.eps_T) << ','
    << csv_number(r.jumps.eps_n) << ',' << csv_number(r.sensitivities.dEpsT_dgT) << ','
    << csv_number(r.sensitivities.dEpsT_d2U) << ',' << csv_number(r.sensitivities.dEpsn_dgT)
    << ',' << csv_number(r.sensitivities.dEpsn_d2U) << ',' << csv_number(r.published.eps_T)
    << ',' << csv_number(r.published.eps_n) << '\n';
  return o.str();
}

// ---- profile -------------------------------------------------------------

std::string cmd_profile(const Settings& s) {
  if (!(s.xmax > 0.0) || !std::isfinite(s.xmax)) throw UsageError("--xmax must be positive");
  if (s.points < 1) throw UsageError("--nx must be >= 1");
  const AnalyticSolution sol({s.gT, s.U});
  static const char* kColumns[] = {
      "x",      "dn",     "u",      "dT",     "N_T",  "N_U",
      "T_T",    "T_U",    "N_T_as", "N_U_as", "T_T_as", "T_U_as",
      "advisory_published_N_T", "advisory_published_N_U", "advisory_published_T_T",
      "advisory_published_T_U"};
  std::vector<std::vector<double>> rows;
  for (int i = 0; i <= s.points; ++i) {
    const double x = i == s.points ? s.xmax : s.xmax * i / s.points;
    const MacroProfile p = sol.macro_profile(x);
    const KineticCoefficients pub = published::kinetic_coefficients(x);
    rows.push_back({x, p.state.dn, p.state.u, p.state.dT, p.coefficients.N_T, p.coefficients.N_U,
                    p.coefficients.T_T, p.coefficients.T_U, p.asymptotes.N_T, p.asymptotes.N_U,
                    p.asymptotes.T_T, p.asymptotes.T_U, pub.N_T, pub.N_U, pub.T_T, pub.T_U});
  }
  if (s.format == "json") {
    json doc;
    doc["version"] = version();
    doc["drive"] = {{"g_T", s.gT}, {"U", s.U}};
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      for (std::size_t c = 0; c < r.size(); ++c) row[kColumns[c]] = r[c];
      doc["rows"].push_back(row);
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_header_line();
  for (std::size_t c = 0; c < std::size(kColumns); ++c) o << (c ? "," : "") << kColumns[c];
  o << '\n';
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) o << (c ? "," : "") << csv_number(r[c]);
    o << '\n';
  }
  return o.str();
}

// ---- distribution --------------------------------------------------------

struct DistributionRow {
  double x;
  double mu;
  Side side;
  double h;
};

std::string cmd_distribution(const Settings& s) {
  if (s.mu_count < 2) throw UsageError("--mu-count must be >= 2");
  if (!(s.mu_max > s.mu_min)) throw UsageError("--mu-max must exceed --mu-min");
  std::vector<double> xs = s.x;
  if (xs.empty()) {
    xs = s.problem == "evaporation" ? std::vector<double>{0.0, 0.05, 0.1, 0.2}
                                    : std::vector<double>{0.0, 1.0, 2.0};
  }
  for (double x : xs) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw UsageError("--x values must be finite and >= 0");
  }
  const AnalyticSolution combined({s.gT, s.U});
  auto value = [&](double x, double mu, Side side) {
    if (s.problem == "combined") return combined.h(x, mu, side);
    const ProblemSplit split = problem_split(x, mu, side);
    return s.problem == "temp-jump" ? split.temperature : split.evaporation;
  };

  std::vector<DistributionRow> rows;
  for (double x : xs) {
    for (int j = 0; j < s.mu_count; ++j) {
      double mu = s.mu_min + (s.mu_max - s.mu_min) * j / (s.mu_count - 1);
      if (std::abs(mu) < 1e-12 * (s.mu_max - s.mu_min)) mu = 0.0;
      if (mu == 0.0) {
        rows.push_back({x, 0.0, Side::Minus, value(x, 0.0, Side::Minus)});
        rows.push_back({x, 0.0, Side::Plus, value(x, 0.0, Side::Plus)});
      } else {
        const Side side = mu > 0.0 ? Side::Plus : Side::Minus;
        rows.push_back({x, mu, side, value(x, mu, side)});
      }
    }
  }
  const std::string label = s.problem == "temp-jump"     ? "h_T_per_gT"
                            : s.problem == "evaporation" ? "h_U_per_2U"
                                                         : "h";
  if (s.format == "json") {
    json doc;
    doc["version"] = version();
    doc["problem"] = s.problem;
    if (s.problem == "combined") doc["drive"] = {{"g_T", s.gT}, {"U", s.U}};
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      doc["rows"].push_back({{"x", r.x}, {"mu", r.mu}, {"side", side_tag(r.side)}, {label, r.h}});
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream o;
  o << csv_header_line() << "x,mu,side," << label << '\n';
  for (const auto& r : rows) {
    o << csv_number(r.x) << ',' << csv_number(r.mu) << ',' << side_tag(r.side) << ','
      << csv_number(r.h) << '\n';
  }
  return o.str();
}

// ---- solve ---------------------------------------------------------------

std::string field_csv(const NumericField& f, const AnalyticSolution& sol, int stride) {
  std::ostringstream o;
  o << csv_header_line() << "x,mu,side,h_numeric,h_analytic\n";
  for (std::size_t i = 0; i < f.points(); i += static_cast<std::size_t>(stride)) {
    for (std::size_t k = f.nodes(); k-- > 0;) {
      o << csv_number(f.x[i]) << ',' << csv_number(-f.mu[k]) << ",-,"
        << csv_number(f.value(i, k, Side::Minus)) << ','
        << csv_number(sol.h(f.x[i], -f.mu[k], Side::Minus)) << '\n';
    }
    for (std::size_t k = 0; k < f.nodes(); ++k) {
      o << csv_number(f.x[i]) << ',' << csv_number(f.mu[k]) << ",+,"
        << csv_number(f.value(i, k, Side::Plus)) << ','
        << csv_number(sol.h(f.x[i], f.mu[k], Side::Plus)) << '\n';
    }
  }
  return o.str();
}

int cmd_solve(const Settings& in, std::ostream& out, std::ostream& err) {
  Settings s = in;
  require_finite(s.gT, "--gT");
  require_finite(s.U, "--U");
  if (s.stride < 1) throw UsageError("--stride must be >= 1");
  s.solver.acceleration = s.acceleration == "anderson" ? Acceleration::Anderson : Acceleration::None;
  s.solver.execution = s.execution == "serial" ? Execution::Serial : Execution::OpenMP;
  try {
    s.solver.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const std::string& w : s.solver.warnings()) err << "warning: " << w << '\n';

  const BoundaryDrive drive{s.gT, s.U};
  const HalfRangeQuadrature quad = HalfRangeQuadrature::build(s.solver.n_mu);
  NumericField field;
  try {
    field = solve(drive, s.solver, quad);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    const auto& h = e.history();
    const std::size_t from = h.size() > 5 ? h.size() - 5 : 0;
    err << "last sup-norm changes:";
    for (std::size_t i = from; i < h.size(); ++i) err << ' ' << h[i];
    err << '\n';
    return kExitNoConvergence;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  }

  const SolveSummary summary = summarize(field, drive, s.solver, quad);
  const AnalyticSolution sol(drive);
  if (s.format == "json") {
    json doc = json::parse(to_json(summary));
    json samples = json::array();
    for (std::size_t i = 0; i < field.points(); i += static_cast<std::size_t>(s.stride)) {
      samples.push_back({{"x", field.x[i]}, {"plus", field.plus_at(i)}, {"minus", field.minus_at(i)}});
    }
    doc["field"] = {{"mu", field.mu}, {"samples", samples}};
    write_output(s.out, doc.dump(2) + "\n", out);
    if (!s.summary.empty()) write_output(s.summary, to_json(summary) + "\n", out);
    return kExitOk;
  }
  if (!s.out.empty() && s.out != "-") write_output(s.out, field_csv(field, sol, s.stride), out);
  write_output(s.summary, to_json(summary) + "\n", out);
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(const Settings& s, std::ostream& out) {
  VerifyOptions opts;
  opts.gamma_perturbation = s.gamma_perturbation;
  opts.include_solver = !s.skip_solver;
  const VerifyReport report = run_verification(opts);
  std::ostringstream o;
  print_report(report, o);
  write_output(s.out, o.str(), out);
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

json summary_json(const SolveSummary& s) {
  json j;
  j["version"] = version();
  j["drive"] = {{"g_T", s.drive.g_T}, {"U", s.drive.U}};
  j["config"] = {{"L", s.L},          {"nx", s.nx},
                 {"n_mu", s.n_mu},    {"tol", s.tol},
                 {"max_iter", s.max_iter}, {"acceleration", s.acceleration},
                 {"execution", s.execution}};
  j["converged"] = s.converged;
  j["iterations"] = s.iterations;
  j["residual_norm"] = s.residual_norm;
  j["extracted"] = {{"eps_T_hat", s.eps_T_hat},
                    {"eps_n_hat", s.eps_n_hat},
                    {"slope_T_hat", s.slope_T_hat},
                    {"slope_n_hat", s.slope_n_hat},
                    {"gamma_hat", s.gamma_hat ? json(*s.gamma_hat) : json(nullptr)}};
  j["analytic"] = {{"eps_T", s.eps_T}, {"eps_n", s.eps_n}, {"gamma0", s.gamma0}};
  j["comparison"] = {{"sup_diff", s.sup_diff},
                     {"rms_diff", s.rms_diff},
                     {"eps_T_delta", s.eps_T_delta},
                     {"eps_n_delta", s.eps_n_delta},
                     {"mass_flux_deviation", s.mass_flux_deviation}};
  j["warnings"] = s.warnings;
  return j;
}

}  // namespace

const char* version() { return KNUDSEN_VERSION; }

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

SolveSummary summarize(const NumericField& field, const BoundaryDrive& drive,
                       const SolverConfig& config, const HalfRangeQuadrature& quad) {
  SolveSummary s;
  s.drive = drive;
  s.L = config.L;
  s.nx = config.nx;
  s.n_mu = config.n_mu;
  s.tol = config.tol;
  s.max_iter = config.max_iter;
  s.acceleration = config.acceleration == Acceleration::Anderson ? "anderson" : "none";
  s.execution = config.execution == Execution::Serial ? "serial" : "openmp";
  s.converged = field.converged;
  s.iterations = field.iterations;
  s.residual_norm = field.residual_norm;
  const ExtractedAsymptotics ex = extract_asymptotics(field, config, quad);
  s.eps_T_hat = ex.eps_T_hat;
  s.eps_n_hat = ex.eps_n_hat;
  s.slope_T_hat = ex.slope_T_hat;
  s.slope_n_hat = ex.slope_n_hat;
  s.gamma_hat = ex.gamma_hat;
  const JumpCoefficients j = jump_coefficients(drive);
  s.eps_T = j.eps_T;
  s.eps_n = j.eps_n;
  s.gamma0 = gamma0();
  const ComparisonReport c = compare_to_analytic(field, drive, config, quad);
  s.sup_diff = c.sup_diff;
  s.rms_diff = c.rms_diff;
  s.eps_T_delta = c.eps_T_delta;
  s.eps_n_delta = c.eps_n_delta;
  for (const MacroState& m : macro_profile(field, quad)) {
    s.mass_flux_deviation = std::max(s.mass_flux_deviation, std::abs(m.u - drive.U));
  }
  s.warnings = config.warnings();
  return s;
}

std::string to_json(const SolveSummary& summary) { return summary_json(summary).dump(2); }

SolveSummary summary_from_json(const std::string& text) {
  const json j = json::parse(text);
  SolveSummary s;
  s.drive = {j.at("drive").at("g_T").get<double>(), j.at("drive").at("U").get<double>()};
  const json& c = j.at("config");
  s.L = c.at("L");
  s.nx = c.at("nx");
  s.n_mu = c.at("n_mu");
  s.tol = c.at("tol");
  s.max_iter = c.at("max_iter");
  s.acceleration = c.at("acceleration");
  s.execution = c.at("execution");
  s.converged = j.at("converged");
  s.iterations = j.at("iterations");
  s.residual_norm = j.at("residual_norm");
  const json& e = j.at("extracted");
  s.eps_T_hat = e.at("eps_T_hat");
  s.eps_n_hat = e.at("eps_n_hat");
  s.slope_T_hat = e.at("slope_T_hat");
  s.slope_n_hat = e.at("slope_n_hat");
  if (!e.at("gamma_hat").is_null()) s.gamma_hat = e.at("gamma_hat").get<double>();
  const json& a = j.at("analytic");
  s.eps_T = a.at("eps_T");
  s.eps_n = a.at("eps_n");
  s.gamma0 = a.at("gamma0");
  const json& r = j.at("comparison");
  s.sup_diff = r.at("sup_diff");
  s.rms_diff = r.at("rms_diff");
  s.eps_T_delta = r.at("eps_T_delta");
  s.eps_n_delta = r.at("eps_n_delta");
  s.mass_flux_deviation = r.at("mass_flux_deviation");
  s.warnings = j.at("warnings").get<std::vector<std::string>>();
  return s;
}

JumpReport jump_report(const BoundaryDrive& drive) {
  return {drive, jump_coefficients(drive), jump_sensitivities(),
          published::jump_coefficients(drive)};
}

std::string to_json(const JumpReport& r) {
  json j;
  j["version"] = version();
  j["drive"] = {{"g_T", r.drive.g_T}, {"U", r.drive.U}};
  j["eps_T"] = r.jumps.eps_T;
  j["eps_n"] = r.jumps.eps_n;
  j["sensitivities"] = {{"dEpsT_dgT", r.sensitivities.dEpsT_dgT},
                        {"dEpsT_d2U", r.sensitivities.dEpsT_d2U},
                        {"dEpsn_dgT", r.sensitivities.dEpsn_dgT},
                        {"dEpsn_d2U", r.sensitivities.dEpsn_d2U}};
  j["advisory_published"] = {{"eps_T", r.published.eps_T}, {"eps_n", r.published.eps_n}};
  return j.dump(2);
}

JumpReport jump_report_from_json(const std::string& text) {
  const json j = json::parse(text);
  JumpReport r;
  r.drive = {j.at("drive").at("g_T").get<double>(), j.at("drive").at("U").get<double>()};
  r.jumps = {j.at("eps_T").get<double>(), j.at("eps_n").get<double>()};
  const json& s = j.at("sensitivities");
  r.sensitivities = {s.at("dEpsT_dgT"), s.at("dEpsT_d2U"), s.at("dEpsn_dgT"), s.at("dEpsn_d2U")};
  r.published = {j.at("advisory_published").at("eps_T").get<double>(),
                 j.at("advisory_published").at("eps_n").get<double>()};
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Half-space temperature-jump and weak-evaporation problem for the kinetic "
               "equation with collision frequency proportional to molecular speed"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  CLI::App* jumps = app.add_subcommand("jumps", "Temperature and concentration jumps");
  add_drive(jumps, s);
  add_format_out(jumps, s);

  CLI::App* profile = app.add_subcommand("profile", "Macroparameter and kinetic-coefficient profiles");
  add_drive(profile, s);
  profile->add_option("--xmax", s.xmax, "Largest x")->capture_default_str();
  profile->add_option("--nx", s.points, "Number of x intervals")->capture_default_str();
  add_format_out(profile, s);

  CLI::App* dist = app.add_subcommand("distribution", "Distribution function on a mu grid");
  dist->add_option("--problem", s.problem, "temp-jump, evaporation or combined")
      ->check(CLI::IsMember({"temp-jump", "evaporation", "combined"}))
      ->capture_default_str();
  add_drive(dist, s);
  dist->add_option("--x", s.x, "x values (default 0,1,2; evaporation 0,0.05,0.1,0.2)")
      ->delimiter(',');
  dist->add_option("--mu-min", s.mu_min, "Smallest mu")->capture_default_str();
  dist->add_option("--mu-max", s.mu_max, "Largest mu")->capture_default_str();
  dist->add_option("--mu-count", s.mu_count, "Number of evenly spaced mu values")
      ->capture_default_str();
  add_format_out(dist, s);

  CLI::App* solve_cmd = app.add_subcommand("solve", "Numerical solution by source iteration");
  add_drive(solve_cmd, s);
  solve_cmd->add_option("--L", s.solver.L, "Domain length")->capture_default_str();
  solve_cmd->add_option("--nx", s.solver.nx, "Number of cells")->capture_default_str();
  solve_cmd->add_option("--nmu", s.solver.n_mu, "Half-range quadrature nodes")->capture_default_str();
  solve_cmd->add_option("--tol", s.solver.tol, "Sup-norm change tolerance")->capture_default_str();
  solve_cmd->add_option("--max-iter", s.solver.max_iter, "Iteration cap")->capture_default_str();
  solve_cmd->add_option("--acceleration", s.acceleration, "none or anderson")
      ->check(CLI::IsMember({"none", "anderson"}))
      ->capture_default_str();
  solve_cmd->add_option("--anderson-depth", s.solver.anderson_depth, "Anderson history length")
      ->capture_default_str();
  solve_cmd->add_option("--execution", s.execution, "serial or openmp")
      ->check(CLI::IsMember({"serial", "openmp"}))
      ->capture_default_str();
  solve_cmd->add_option("--fit-begin", s.solver.fit_begin, "Asymptote fit window start / L")
      ->capture_default_str();
  solve_cmd->add_option("--fit-end", s.solver.fit_end, "Asymptote fit window end / L")
      ->capture_default_str();
  solve_cmd->add_option("--stride", s.stride, "Write every stride-th grid point")
      ->capture_default_str();
  solve_cmd->add_option("--summary", s.summary, "JSON summary file (default: standard output)");
  add_format_out(solve_cmd, s);

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--gamma-perturbation", s.gamma_perturbation,
                     "Test hook: offset added to the decay rate of the solution under test");
  verify->add_flag("--skip-solver", s.skip_solver, "Omit the numerical cross-check");
  verify->add_option("--out", s.out, "Report file (default: standard output)");
  verify->add_option("--config", s.config, "Flat JSON file of flag values; flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help(e.get_name().empty() ? "" : e.get_name());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (!s.config.empty()) apply_config(*active, s.config);
    require_finite(s.gT, "--gT");
    require_finite(s.U, "--U");
    if (active == jumps) {
      write_output(s.out, cmd_jumps(s), out);
    } else if (active == profile) {
      write_output(s.out, cmd_profile(s), out);
    } else if (active == dist) {
      write_output(s.out, cmd_distribution(s), out);
    } else if (active == solve_cmd) {
      return cmd_solve(s, out, err);
    } else if (active == verify) {
      return cmd_verify(s, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace knudsen::cli
