#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "maxorder/baseline.hpp"
#include "maxorder/conditions.hpp"
#include "maxorder/errors.hpp"
#include "maxorder/majorization.hpp"
#include "maxorder/oracle.hpp"
#include "maxorder/order_checks.hpp"
#include "maxorder/parse.hpp"
#include "maxorder/report.hpp"
#include "maxorder/scale_model.hpp"
#include "maxorder/theorems.hpp"

namespace maxorder::cli {
namespace {

using nlohmann::json;

constexpr const char* kOutputDirEnv = "MAXORDER_OUTPUT_DIR";

struct RunConfig {
  std::string command;
  std::string baseline = "exp";
  std::string baseline2;
  std::string lambda;
  std::string theta;
  std::string outlier;
  std::string outlier2;
  std::string orders = "all";
  std::string grid;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  std::size_t count = 10000;
  std::size_t streams = 1;
  std::size_t trials = 100;
  std::size_t points = 2000;
  std::string theorem = "thm2";
  std::string drop;
  std::string alpha_range;
  std::string beta_range;
  std::string lambda_range;
  std::string x;
  std::string y;
  std::string out;
  std::string csv;
  std::string config;
};

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) return std::filesystem::path(dir) / p;
  }
  return p;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  const auto path = resolve_output(cfg.out);
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write report to '" + path.string() + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Reads "key=value" lines and appends "--key value" for every key the command
// line does not already set.
std::vector<std::string> merge_config(std::vector<std::string> args) {
  std::string file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) file = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) file = args[i].substr(9);
  }
  if (file.empty()) return args;
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read config file '" + file + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#' || line[first] == ';' || line[first] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r\"");
      const auto e = s.find_last_not_of(" \t\r\"");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    bool present = false;
    for (const auto& a : args) present = present || a == flag || a.rfind(flag + "=", 0) == 0;
    if (!present) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

Range parse_range(const std::string& text) {
  const auto v = parse::real_list(text);
  if (v.size() != 2 || !(v[0] > 0.0) || !(v[0] <= v[1])) throw UsageError("range must be 'lo,hi' with 0 < lo <= hi");
  return {v[0], v[1]};
}

Grid resolve_grid(const RunConfig& cfg, const Grid& fallback) {
  Grid g = cfg.grid.empty() ? fallback : Grid::parse(cfg.grid);
  g.validate();
  return g;
}

void validate_common(const RunConfig& cfg) {
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) throw UsageError("--tol must be positive");
  if (!cfg.grid.empty()) Grid::parse(cfg.grid);
}

int verdict_exit(const std::vector<Outcome>& outcomes) {
  bool fail = false;
  bool inconclusive = false;
  for (auto o : outcomes) {
    fail = fail || o == Outcome::fails;
    inconclusive = inconclusive || o == Outcome::inconclusive;
  }
  if (fail) return kSomeFail;
  if (inconclusive) return kInconclusive;
  return kAllHold;
}

std::vector<Order> requested_orders(const std::string& text) {
  if (text == "all") return {Order::st, Order::rh, Order::lr};
  std::vector<Order> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item == "st") {
      out.push_back(Order::st);
    } else if (item == "rh") {
      out.push_back(Order::rh);
    } else if (item == "lr") {
      out.push_back(Order::lr);
    } else {
      throw UsageError("unknown order '" + item + "' at position " + std::to_string(start + 1) +
                       " (expected st, rh, lr or all)");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  const auto orders = requested_orders(cfg.orders);
  const auto base = parse_baseline(cfg.baseline);
  if (cfg.lambda.empty() == cfg.outlier.empty()) throw UsageError("compare needs exactly one of --lambda or --outlier");
  if (cfg.theta.empty() == cfg.outlier2.empty()) throw UsageError("compare needs exactly one of --theta or --outlier2");

  json report;
  report["command"] = "compare";
  Analysis analysis;
  if (!cfg.baseline2.empty()) {
    if (cfg.outlier.empty() || cfg.outlier2.empty()) {
      throw UsageError("--baseline2 requires the block forms --outlier and --outlier2");
    }
    const auto g = parse_baseline(cfg.baseline2);
    const auto ox = parse_outlier(cfg.outlier, base);
    const auto oy = parse_outlier(cfg.outlier2, base);
    const TwoBaselineModel x{base, g, ox.p, ox.lambda1, ox.q, ox.lambda};
    const TwoBaselineModel y{base, g, oy.p, oy.lambda1, oy.q, oy.lambda};
    if (x.p + x.q != y.p + y.q) throw UsageError("models have different numbers of components");
    const auto ex = expand(x);
    const auto ey = expand(y);
    analysis = analyze(x, y, resolve_grid(cfg, Grid::default_for(ex, ey)), cfg.tol);
    report["models"] = {{"x", ex.describe()}, {"y", ey.describe()}};
  } else {
    const ScaleModel x = cfg.outlier.empty() ? ScaleModel(base, parse::real_list(cfg.lambda))
                                             : expand(parse_outlier(cfg.outlier, base));
    const ScaleModel y = cfg.outlier2.empty() ? ScaleModel(base, parse::real_list(cfg.theta))
                                              : expand(parse_outlier(cfg.outlier2, base));
    if (x.size() != y.size()) {
      throw UsageError("models have different numbers of components (" + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()) + ")");
    }
    analysis = analyze(x, y, resolve_grid(cfg, Grid::default_for(x, y)), cfg.tol);
    report["models"] = {{"x", x.describe()}, {"y", y.describe()}};
  }

  report["analysis"] = to_json(analysis);
  std::vector<Outcome> outcomes;
  json requested = json::array();
  for (auto o : orders) {
    requested.push_back(std::string(to_string(o)));
    const auto& v = o == Order::st ? analysis.comparison.st : o == Order::rh ? analysis.comparison.rh : analysis.comparison.lr;
    outcomes.push_back(v.outcome);
  }
  report["requested_orders"] = requested;
  const int code = analysis.contradiction ? kContradiction : verdict_exit(outcomes);
  report["exit_code"] = code;
  emit(cfg, dump(report), out);
  return code;
}

int cmd_verify_conditions(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  const auto base = parse_baseline(cfg.baseline);
  const auto rep = verify_conditions(base, resolve_grid(cfg, Grid{}), cfg.tol);
  const int code = verdict_exit({rep.psi_decreasing.outcome, rep.chi_increasing.outcome, rep.eta_increasing.outcome});
  json j = {{"command", "verify-conditions"}, {"report", to_json(rep)}, {"exit_code", code}};
  emit(cfg, dump(j), out);
  return code;
}

int cmd_majorize(const RunConfig& cfg, std::ostream& out) {
  if (cfg.x.empty() || cfg.y.empty()) throw UsageError("majorize needs --x and --y");
  const auto x = parse::real_list(cfg.x);
  const auto y = parse::real_list(cfg.y);
  const auto rel = compare_majorization(x, y);
  json j = {{"command", "majorize"}, {"x", x}, {"y", y}, {"relation", to_json(rel)}, {"exit_code", 0}};
  emit(cfg, dump(j), out);
  return kAllHold;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.lambda.empty()) throw UsageError("simulate needs --lambda");
  if (cfg.count < 1) throw UsageError("--n must be >= 1");
  if (cfg.streams < 1) throw UsageError("--streams must be >= 1");
  const auto base = parse_baseline(cfg.baseline);
  const ScaleModel x(base, parse::real_list(cfg.lambda));
  const auto batch = sample_max_streams(x, cfg.count, cfg.seed, cfg.streams);
  const double d = sup_distance(batch, x);
  const double n = static_cast<double>(batch.values.size());
  const double mean = std::accumulate(batch.values.begin(), batch.values.end(), 0.0) / n;
  json j = {{"command", "simulate"},
            {"model", x.describe()},
            {"count", batch.values.size()},
            {"seed", cfg.seed},
            {"streams", cfg.streams},
            {"sup_distance", d},
            {"dkw_bound_95", std::sqrt(std::log(2.0 / 0.05) / (2.0 * n))},
            {"mean", mean}};
  if (!cfg.theta.empty()) {
    const ScaleModel y(base, parse::real_list(cfg.theta));
    if (y.size() != x.size()) throw UsageError("models have different numbers of components");
    j["mc_st"] = to_json(mc_check_st(x, y, cfg.count, cfg.seed));
    j["model_y"] = y.describe();
  }
  if (!cfg.csv.empty()) {
    const auto path = resolve_output(cfg.csv);
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write samples to '" + path.string() + "'");
    write_csv(f, batch);
    j["csv"] = path.string();
  }
  j["exit_code"] = 0;
  emit(cfg, dump(j), out);
  return kAllHold;
}

int cmd_falsify(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  FalsifyConfig fc;
  fc.theorem = cfg.theorem;
  fc.trials = cfg.trials;
  fc.seed = cfg.seed;
  fc.tolerance = cfg.tol;
  fc.grid_points = cfg.points;
  if (!cfg.drop.empty()) fc.dropped = cfg.drop;
  if (!cfg.alpha_range.empty()) fc.alpha = parse_range(cfg.alpha_range);
  if (!cfg.beta_range.empty()) fc.beta = parse_range(cfg.beta_range);
  if (!cfg.lambda_range.empty()) fc.lambda = parse_range(cfg.lambda_range);
  if (fc.grid_points < 2) throw UsageError("--points must be >= 2");
  const auto rep = falsify(fc);
  const int code = rep.no_counterexample() ? kAllHold : kSomeFail;
  json j = {{"command", "falsify"}, {"report", to_json(rep)}, {"exit_code", code}};
  emit(cfg, dump(j), out);
  return code;
}

int cmd_dump(const RunConfig& cfg, std::ostream& out) {
  validate_common(cfg);
  const auto base = parse_baseline(cfg.baseline);
  std::ostringstream os;
  os.precision(17);
  if (cfg.lambda.empty()) {
    const ConditionFunctions fns(base);
    const auto grid = resolve_grid(cfg, Grid{});
    os << "t,cdf,pdf,reverse_hazard,psi,eta,chi\n";
    for (double t : grid.abscissae()) {
      os << t << ',' << base->cdf(t) << ',' << base->pdf(t) << ',' << base->reverse_hazard(t) << ',' << fns.psi(t)
         << ',' << fns.eta(t) << ',' << fns.chi(t) << '\n';
    }
  } else {
    const ScaleModel m(base, parse::real_list(cfg.lambda));
    const auto grid = resolve_grid(cfg, Grid::default_for(m));
    os << "t,max_cdf,max_pdf,max_reverse_hazard\n";
    for (double t : grid.abscissae()) {
      os << t << ',' << max_cdf(m, t) << ',' << max_pdf(m, t) << ',' << max_reverse_hazard(m, t) << '\n';
    }
  }
  emit(cfg, os.str(), out);
  return kAllHold;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Stochastic comparisons of parallel systems in the scale model", "maxorder"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the report to this file (relative to $" + std::string(kOutputDirEnv) +
                                          " when set)");
    sub->add_option("--config", cfg.config, "Flat key=value file with defaults for the other flags");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid, "tmin,tmax,points,log|lin");
    sub->add_option("--tol", cfg.tol, "Relative tolerance for grid checks");
  };

  auto* compare = app.add_subcommand("compare", "Certify st/rh/lr orders between two parallel systems");
  compare->add_option("--baseline", cfg.baseline, "gg:beta=..,alpha=.. | exp | weibull:shape=.. | gamma:shape=..");
  compare->add_option("--baseline2", cfg.baseline2, "Second baseline G for the q-block (two-baseline models)");
  compare->add_option("--lambda", cfg.lambda, "Scale parameters of X, e.g. 1,3");
  compare->add_option("--theta", cfg.theta, "Scale parameters of Y");
  compare->add_option("--outlier", cfg.outlier, "X as blocks: p=..,lambda1=..,q=..,lambda=..");
  compare->add_option("--outlier2", cfg.outlier2, "Y as blocks: p=..,lambda1=..,q=..,lambda=..");
  compare->add_option("--order", cfg.orders, "st, rh, lr, a comma list, or all");
  add_grid(compare);
  add_output(compare);

  auto* verify = app.add_subcommand("verify-conditions", "Check the baseline preconditions on a grid");
  verify->add_option("--baseline", cfg.baseline, "Baseline spec");
  add_grid(verify);
  add_output(verify);

  auto* majorize = app.add_subcommand("majorize", "Compare two vectors under majorization");
  majorize->add_option("--x", cfg.x, "First vector");
  majorize->add_option("--y", cfg.y, "Second vector");
  add_output(majorize);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo samples of the system lifetime");
  simulate->add_option("--baseline", cfg.baseline, "Baseline spec");
  simulate->add_option("--lambda", cfg.lambda, "Scale parameters");
  simulate->add_option("--theta", cfg.theta, "Optional second model for an empirical st comparison");
  simulate->add_option("--n", cfg.count, "Number of draws");
  simulate->add_option("--seed", cfg.seed, "64-bit seed");
  simulate->add_option("--streams", cfg.streams, "Independent generator streams");
  simulate->add_option("--csv", cfg.csv, "Export the batch as CSV");
  add_output(simulate);

  auto* fals = app.add_subcommand("falsify", "Randomized validation of a theorem");
  fals->add_option("--theorem", cfg.theorem, "thm1, thm2, thm4, corollary, thm7, thm8 or gamma-wsm");
  fals->add_option("--trials", cfg.trials, "Number of random instances");
  fals->add_option("--seed", cfg.seed, "64-bit seed");
  fals->add_option("--drop", cfg.drop, "Hypothesis to drop (explore mode): min, region or ratio");
  fals->add_option("--alpha-range", cfg.alpha_range, "lo,hi");
  fals->add_option("--beta-range", cfg.beta_range, "lo,hi");
  fals->add_option("--lambda-range", cfg.lambda_range, "lo,hi");
  fals->add_option("--points", cfg.points, "Grid points per instance");
  fals->add_option("--tol", cfg.tol, "Relative tolerance for grid checks");
  add_output(fals);

  auto* dumpcmd = app.add_subcommand("dump", "CSV grid dump of a baseline or a system");
  dumpcmd->add_option("--baseline", cfg.baseline, "Baseline spec");
  dumpcmd->add_option("--lambda", cfg.lambda, "Scale parameters (omit for baseline functions)");
  add_grid(dumpcmd);
  add_output(dumpcmd);

  try {
    auto args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (compare->parsed()) return cmd_compare(cfg, out);
    if (verify->parsed()) return cmd_verify_conditions(cfg, out);
    if (majorize->parsed()) return cmd_majorize(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    if (fals->parsed()) return cmd_falsify(cfg, out);
    if (dumpcmd->parsed()) return cmd_dump(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ContradictionError& e) {
    err << "contradiction: " << e.what() << '\n';
    return kContradiction;
  }
  return kUsageError;
}

}  // namespace maxorder::cli
