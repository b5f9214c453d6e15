#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "newton_osc/report.hpp"

using namespace newton_osc;
using nlohmann::json;

namespace {

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorKind::kInput, "bad_list", "empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

IntVector parse_int_list(const std::string& text, const char* flag) {
  IntVector out;
  for (const auto& s : split_csv(text)) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw Error(ErrorKind::kInput, "bad_list", std::string(flag) + ": not an integer: " + s);
    out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  for (const auto& s : split_csv(text)) {
    try {
      out.push_back(to_double(parse_rational(s)));
    } catch (const Error&) {
      throw Error(ErrorKind::kInput, "bad_list", std::string(flag) + ": not a number: " + s);
    }
  }
  return out;
}

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::kInput, "bad_output", "cannot open " + path);
    f << text;
  }
};

struct CommonFlags {
  std::size_t dim = 0;
  std::string phase;
  std::string beta;
  std::string radius;
  double lmin = 1e2;
  double lmax = 0;
  std::size_t lpoints = 24;
  double quad_tol = 1e-6;
  double fit_tol = 0.05;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string output;
  std::string format = "json";

  void attach(CLI::App* app, bool numeric) {
    app->add_option("--dim", dim, "number of variables")->required();
    app->add_option("--phase", phase, "polynomial phase, e.g. \"x1^2*x2\"")->required();
    app->add_option("--beta", beta, "comma-separated amplitude exponents");
    app->add_option("--seed", seed, "seed for numeric nondegeneracy checks");
    app->add_option("--output", output, "write to this file instead of stdout");
    if (numeric) {
      app->add_option("--radius", radius, "bump radius, one value or one per axis");
      app->add_option("--lmin", lmin, "smallest lambda");
      app->add_option("--lmax", lmax, "largest lambda");
      app->add_option("--lpoints", lpoints, "number of lambda grid points");
      app->add_option("--quad-tol", quad_tol, "relative tolerance of node doubling");
      app->add_option("--fit-tol", fit_tol, "allowed |fitted - predicted| exponent");
      app->add_option("--threads", threads, "worker threads for the sweep (0: all cores)");
      app->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }
  }

  AnalysisConfig config() const {
    AnalysisConfig c;
    c.dimension = dim;
    c.phase = phase;
    if (!beta.empty()) c.beta = parse_int_list(beta, "--beta");
    if (!radius.empty()) c.radius = parse_double_list(radius, "--radius");
    c.seed = seed;
    c.quad_tol = quad_tol;
    c.fit_tol = fit_tol;
    c.lambda_min = lmin;
    c.lambda_max = lmax;
    c.lambda_points = lpoints;
    c.threads = threads;
    return c.resolved();
  }
};

int run_analyze(const CommonFlags& flags, bool verify) {
  const AnalysisConfig config = flags.config();
  Analysis analysis = run_analysis(config);
  if (verify) run_verification(analysis, config);
  const Output out{flags.output};
  if (verify && flags.format == "csv") {
    std::ostringstream os;
    write_sweep_csv(os, *analysis.sweep);
    out.write(os.str());
  } else {
    out.write(analysis_report(analysis, config).dump(2) + "\n");
  }
  if (verify && !fit_within_tolerance(analysis, config)) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "fitted exponent %.4f differs from predicted %s by more than %g",
                  analysis.sweep->fit.fitted_exponent, to_string(analysis.weighted.exponent).c_str(), config.fit_tol);
    throw Error(ErrorKind::kFitTolerance, "fit_out_of_tolerance", buf);
  }
  return 0;
}

int run_charts(const CommonFlags& flags) {
  const AnalysisConfig config = flags.config();
  const Analysis analysis = run_analysis(config);
  Output{flags.output}.write(charts_report(analysis, config).dump(2) + "\n");
  return 0;
}

struct SublevelFlags {
  std::string alpha;
  std::string u;
  double umin = 1e-6;
  std::size_t upoints = 13;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 0;
  std::string output;
};

int run_sublevel(const SublevelFlags& flags) {
  const IntVector alpha = parse_int_list(flags.alpha, "--alpha");
  std::vector<std::pair<std::string, Rational>> grid;
  if (!flags.u.empty()) {
    for (const auto& s : split_csv(flags.u)) grid.emplace_back(s, parse_rational(s));
  } else {
    if (!(flags.umin > 0 && flags.umin <= 1) || flags.upoints < 2) {
      throw Error(ErrorKind::kInput, "bad_grid", "need 0 < --umin <= 1 and --upoints >= 2");
    }
    for (double u : geometric_grid(flags.umin, 1.0, flags.upoints)) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.6g", u);
      grid.emplace_back(buf, parse_rational(buf));
    }
  }
  std::ostringstream os;
  const auto expr = sublevel_measure(alpha, Rational(1, 2)).expression();
  os << "# alpha=" << flags.alpha << " samples=" << flags.samples << " seed=" << flags.seed << "\n";
  os << "# measure(u) = " << expr << "\n";
  os << "u,exact_value,float_value,monte_carlo_value,mc_stderr\n";
  for (const auto& [text, u] : grid) {
    const auto m = sublevel_measure(alpha, u);
    const auto mc = sublevel_monte_carlo(alpha, to_double(u), flags.samples, flags.seed);
    std::string exact = m.saturated ? "1" : m.expression();
    for (std::size_t pos = exact.find('u'); pos != std::string::npos; pos = exact.find('u', pos + 1)) {
      exact.replace(pos, 1, "(" + to_string(u) + ")");
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.3g\n", m.value, mc.mean, mc.stderr_);
    os << text << ",\"" << exact << "\"" << buf;
  }
  Output{flags.output}.write(os.str());
  return 0;
}

void report_error(const Error& e) { std::cerr << error_json(e).dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton polyhedra, toric charts and oscillatory decay of polynomial phases"};
  app.require_subcommand(1);

  CommonFlags analyze_flags, verify_flags, charts_flags;
  bool verify_in_analyze = false;
  auto* analyze = app.add_subcommand("analyze", "exact pipeline report");
  analyze_flags.attach(analyze, true);
  analyze->add_flag("--verify", verify_in_analyze, "also run the numeric lambda sweep");

  auto* verify = app.add_subcommand("verify", "lambda sweep and exponent fit");
  verify_flags.attach(verify, true);

  auto* charts = app.add_subcommand("charts", "toric data only");
  charts_flags.attach(charts, false);

  SublevelFlags sub_flags;
  auto* sublevel = app.add_subcommand("sublevel", "measure of {x in [0,1]^n : x^alpha < u}");
  sublevel->add_option("--alpha", sub_flags.alpha, "comma-separated exponents")->required();
  sublevel->add_option("--u", sub_flags.u, "comma-separated u values (default: geometric grid)");
  sublevel->add_option("--umin", sub_flags.umin, "smallest u of the default grid");
  sublevel->add_option("--upoints", sub_flags.upoints, "points in the default grid");
  sublevel->add_option("--samples", sub_flags.samples, "Monte Carlo samples per u");
  sublevel->add_option("--seed", sub_flags.seed, "Monte Carlo seed");
  sublevel->add_option("--output", sub_flags.output, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(Error(ErrorKind::kInput, "bad_flags", e.what()));
    return exit_code(ErrorKind::kInput);
  }

  try {
    if (*analyze) return run_analyze(analyze_flags, verify_in_analyze);
    if (*verify) return run_analyze(verify_flags, true);
    if (*charts) return run_charts(charts_flags);
    if (*sublevel) return run_sublevel(sub_flags);
  } catch (const Error& e) {
    report_error(e);
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    report_error(Error(ErrorKind::kInternal, "internal", e.what()));
    return exit_code(ErrorKind::kInternal);
  }
  return exit_code(ErrorKind::kInternal);
}
