#include "maxorder/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "maxorder/errors.hpp"
#include "maxorder/random.hpp"

namespace maxorder {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void validate_against(TheoremConclusion& c, const Comparison& cmp) {
  if (c.claim == "rh") {
    c.validation = cmp.rh.outcome;
    c.witness = cmp.rh.witness;
  } else if (c.claim == "lr") {
    c.validation = cmp.lr.outcome;
    c.witness = cmp.lr.witness;
  } else {
    c.validation = cmp.rh_ratio.outcome;
    c.witness = cmp.rh_ratio.witness;
  }
}

const char* kPsi = "t r(t) decreasing on the baseline grid";
const char* kChi = "t^2 r'(t) increasing on the baseline grid";
const char* kEta = "t r'(t)/r(t) decreasing on the baseline grid";

bool all_equal(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
}

}  // namespace

std::optional<OutlierStructure> detect_outlier_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  std::vector<double> xs(x.begin(), x.end());
  std::vector<double> ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<double> candidates = xs;
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  for (double c : candidates) {
    const auto cx = static_cast<std::size_t>(std::count(xs.begin(), xs.end(), c));
    const auto cy = static_cast<std::size_t>(std::count(ys.begin(), ys.end(), c));
    for (std::size_t q = 1; q <= std::min(cx, cy); ++q) {
      if (q >= xs.size()) continue;
      auto strip = [&](const std::vector<double>& v) {
        std::vector<double> rest;
        std::size_t removed = 0;
        for (double e : v) {
          if (e == c && removed < q) {
            ++removed;
          } else {
            rest.push_back(e);
          }
        }
        return rest;
      };
      const auto rx = strip(xs);
      const auto ry = strip(ys);
      if (!all_equal(rx) || !all_equal(ry)) continue;
      const double a = rx.front();
      const double b = ry.front();
      if (b <= std::min(a, c)) return OutlierStructure{rx.size(), q, a, b, c};
    }
  }
  return std::nullopt;
}

std::vector<TheoremConclusion> evaluate_theorems(const ScaleModel& x, const ScaleModel& y,
                                                 const ConditionReport& report, const Comparison& cmp) {
  std::vector<TheoremConclusion> out;
  if (x.size() != y.size()) return out;
  const auto bx = x.common_baseline();
  const auto by = y.common_baseline();
  if (!bx || !by || bx->describe() != by->describe() || bx->describe() != report.baseline) return out;

  const auto lx = x.lambdas();
  const auto ly = y.lambdas();
  const auto rel = compare_majorization(lx, ly);
  const bool psi = report.psi_decreasing.holds();
  const bool chi = report.chi_increasing.holds();
  const bool eta = report.eta_increasing.holds();

  auto emit = [&](std::string id, std::string claim, std::vector<std::string> hyp) {
    TheoremConclusion c{std::move(id), std::move(claim), std::move(hyp), Outcome::holds, std::nullopt};
    validate_against(c, cmp);
    out.push_back(std::move(c));
  };

  if (chi && rel.majorized) emit("thm1", "rh", {kChi, "lambda <=m theta"});
  if (psi && chi && rel.weakly_supermajorized) emit("thm2", "rh", {kPsi, kChi, "lambda <=w theta"});

  if (const auto s = detect_outlier_pair(lx, ly); s && rel.weakly_supermajorized) {
    const std::string block = "blocks p=" + std::to_string(s->p) + " (lambda1=" + fmt(s->lambda1) +
                              ", lambda1*=" + fmt(s->lambda1_star) + "), q=" + std::to_string(s->q) +
                              " (lambda=" + fmt(s->lambda) + ")";
    const std::string min_hyp = "lambda1* = min(lambda, lambda1, lambda1*)";
    const bool pair = s->p == 1 && s->q == 1;
    if (psi && eta) {
      emit(pair ? "thm3" : "thm6", "rh_ratio_increasing", {kPsi, kEta, "lambda <=w theta", min_hyp, block});
    }
    if (psi && eta && chi) {
      emit(pair ? "thm4" : "thm7", "lr", {kPsi, kEta, kChi, "lambda <=w theta", min_hyp, block});
    }
  }

  if (lx.size() == 2 && ly[0] == ly[1]) {
    const double common = ly[0];
    if (common <= std::min(lx[0], lx[1]) && common <= (lx[0] + lx[1]) / 2.0 && psi && eta && chi) {
      emit("corollary", "lr",
           {kPsi, kEta, kChi, "theta = (lambda, lambda) with lambda <= min(lambda1, lambda2)",
            "lambda <= (lambda1 + lambda2)/2"});
    }
  }
  return out;
}

std::vector<TheoremConclusion> evaluate_theorems(const TwoBaselineModel& x, const TwoBaselineModel& y,
                                                 const ConditionReport& report_f,
                                                 const MonotoneVerdict& rf_over_rg, const Comparison& cmp) {
  std::vector<TheoremConclusion> out;
  const bool same_blocks = x.p == y.p && x.q == y.q && x.lambda == y.lambda &&
                           x.baseline_f->describe() == y.baseline_f->describe() &&
                           x.baseline_g->describe() == y.baseline_g->describe() &&
                           report_f.baseline == x.baseline_f->describe();
  if (!same_blocks) return out;
  const bool min_ok = y.lambda1 <= std::min(x.lambda, x.lambda1);
  if (report_f.psi_decreasing.holds() && report_f.eta_increasing.holds() && rf_over_rg.holds() && min_ok) {
    TheoremConclusion c{"thm8",
                        "lr",
                        {"t r_F(t) decreasing on the baseline grid", "t r_F'(t)/r_F(t) decreasing on the baseline grid",
                         "r_F(t)/r_G(t) increasing on the baseline grid", "lambda1* = min(lambda, lambda1, lambda1*)"},
                        Outcome::holds,
                        std::nullopt};
    validate_against(c, cmp);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<TheoremConclusion> applicable_theorems(const ScaleModel& x, const ScaleModel& y,
                                                   const ConditionReport& report, const Grid& grid,
                                                   double tolerance) {
  const auto cmp = compare_orders(x, y, grid, tolerance);
  auto out = evaluate_theorems(x, y, report, cmp);
  for (const auto& c : out) {
    if (c.contradicted()) {
      throw ContradictionError(c.id + " predicts " + c.claim + " but the grid check fails");
    }
  }
  return out;
}

namespace {

bool any_contradiction(const std::vector<TheoremConclusion>& v) {
  return std::any_of(v.begin(), v.end(), [](const auto& c) { return c.contradicted(); });
}

}  // namespace

Analysis analyze(const ScaleModel& x, const ScaleModel& y, const Grid& grid, double tolerance) {
  grid.validate();
  Analysis a;
  a.grid = grid;
  a.majorization = compare_majorization(x.lambdas(), y.lambdas());
  a.comparison = compare_orders(x, y, grid, tolerance);
  const auto bx = x.common_baseline();
  const auto by = y.common_baseline();
  if (bx && by && bx->describe() == by->describe()) {
    const Grid bg = baseline_grid(grid, std::min(x.lambda_min(), y.lambda_min()),
                                  std::max(x.lambda_max(), y.lambda_max()));
    a.conditions.push_back(verify_conditions(bx, bg, tolerance));
    a.theorems = evaluate_theorems(x, y, a.conditions.front(), a.comparison);
  }
  a.contradiction = any_contradiction(a.theorems);
  return a;
}

Analysis analyze(const TwoBaselineModel& x, const TwoBaselineModel& y, const Grid& grid, double tolerance) {
  grid.validate();
  const auto ex = expand(x);
  const auto ey = expand(y);
  Analysis a;
  a.grid = grid;
  a.majorization = compare_majorization(ex.lambdas(), ey.lambdas());
  a.comparison = compare_orders(ex, ey, grid, tolerance);
  const Grid bg = baseline_grid(grid, std::min(ex.lambda_min(), ey.lambda_min()),
                                std::max(ex.lambda_max(), ey.lambda_max()));
  a.conditions.push_back(verify_conditions(x.baseline_f, bg, tolerance));
  a.conditions.push_back(verify_conditions(x.baseline_g, bg, tolerance));
  a.rf_over_rg = check_rf_over_rg_increasing(*x.baseline_f, *x.baseline_g, bg, tolerance);
  a.theorems = evaluate_theorems(x, y, a.conditions.front(), *a.rf_over_rg, a.comparison);
  a.contradiction = any_contradiction(a.theorems);
  return a;
}

// ---------------------------------------------------------------------------
// falsify

namespace {

double log_uniform(Rng& rng, Range r) { return std::exp(rng.uniform(std::log(r.lo), std::log(r.hi))); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) { return static_cast<std::size_t>(rng.integer(lo, hi)); }

std::vector<double> random_lambdas(Rng& rng, std::size_t n, Range r) {
  std::vector<double> v(n);
  for (auto& e : v) e = log_uniform(rng, r);
  return v;
}

// Inverse Robin-Hood transfers: the result majorizes the input.
std::vector<double> spread(Rng& rng, std::vector<double> v, std::size_t transfers) {
  for (std::size_t k = 0; k < transfers; ++k) {
    std::size_t i = pick(rng, 0, v.size() - 1);
    std::size_t j = pick(rng, 0, v.size() - 2);
    if (j >= i) ++j;
    if (v[i] > v[j]) std::swap(i, j);  // v[i] <= v[j]
    const double delta = rng.uniform() * 0.9 * v[i];
    v[i] -= delta;
    v[j] += delta;
  }
  return v;
}

// Lowers one coordinate of the increasing arrangement: the input is weakly
// supermajorized by the result.
std::vector<double> lower_one(Rng& rng, std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t i = pick(rng, 0, v.size() - 1);
  v[i] *= rng.uniform(0.3, 1.0);
  return v;
}

struct Instance {
  std::shared_ptr<const Baseline> f;
  std::shared_ptr<const Baseline> g;  // thm8 only
  std::vector<double> lambda;
  std::vector<double> theta;
  std::size_t p = 0;
  std::size_t q = 0;
};

struct TheoremPlan {
  Range alpha;
  Range beta;
  bool alpha_le_beta;
  const char* claim;
};

TheoremPlan plan_for(const std::string& id) {
  if (id == "thm1" || id == "thm2") return {{0.05, 2.0}, {0.05, 1.0}, false, "rh"};
  if (id == "thm4" || id == "corollary" || id == "thm7" || id == "thm8") return {{0.05, 1.0}, {0.05, 1.0}, true, "lr"};
  if (id == "gamma-wsm") return {{0.05, 1.0}, {1.0, 1.0}, false, "rh"};
  throw UsageError("unknown theorem id '" + id + "' (expected thm1, thm2, thm4, corollary, thm7, thm8 or gamma-wsm)");
}

std::shared_ptr<const Baseline> sample_gg(Rng& rng, const TheoremPlan& plan, bool region_dropped,
                                          const std::string& id) {
  double beta = plan.beta.lo == plan.beta.hi ? plan.beta.lo : rng.uniform(plan.beta.lo, plan.beta.hi);
  double alpha = rng.uniform(plan.alpha.lo, plan.alpha.hi);
  if (region_dropped) {
    if (id == "gamma-wsm") {
      alpha = rng.uniform(1.0, 5.0);
    } else if (plan.alpha_le_beta) {
      // Leave the alpha <= beta <= 1 region through either inequality.
      if (rng.uniform() < 0.5) {
        beta = rng.uniform(1.0, 3.0);
        alpha = rng.uniform(0.05, beta);
      } else {
        beta = rng.uniform(0.05, 1.0);
        alpha = rng.uniform(beta, 2.0);
      }
    } else {
      beta = rng.uniform(1.0, 3.0);
    }
  } else if (plan.alpha_le_beta) {
    alpha = std::min(alpha, beta) * rng.uniform(0.05, 1.0);
    alpha = std::max(alpha, plan.alpha.lo * 0.5);
    alpha = std::min(alpha, beta);
  }
  return make_baseline(GeneralizedGammaParams(beta, alpha));
}

Instance sample_instance(Rng& rng, const std::string& id, const TheoremPlan& plan, const FalsifyConfig& cfg) {
  const bool region_dropped = cfg.dropped && *cfg.dropped == "region";
  const bool min_dropped = cfg.dropped && *cfg.dropped == "min";
  const Range lam = cfg.lambda.value_or(Range{0.2, 5.0});
  Instance in;
  in.f = sample_gg(rng, plan, region_dropped, id);

  if (id == "thm1" || id == "thm2" || id == "gamma-wsm") {
    const std::size_t n = pick(rng, 2, 6);
    in.lambda = random_lambdas(rng, n, lam);
    in.theta = spread(rng, in.lambda, pick(rng, 1, 3));
    if (id != "thm1") in.theta = lower_one(rng, in.theta);
    return in;
  }
  if (id == "corollary") {
    in.lambda = random_lambdas(rng, 2, lam);
    const double m = std::min(in.lambda[0], in.lambda[1]);
    const double common = min_dropped ? rng.uniform(m * 1.01, std::max(in.lambda[0], in.lambda[1]) * 1.5)
                                      : m * rng.uniform(0.1, 1.0);
    in.theta = {common, common};
    return in;
  }
  // thm4, thm7, thm8: block structure.
  in.p = id == "thm4" ? 1 : pick(rng, 1, 5);
  in.q = id == "thm4" ? 1 : pick(rng, 1, 5);
  const double lambda1 = log_uniform(rng, lam);
  const double lambda = log_uniform(rng, lam);
  const double m = std::min(lambda1, lambda);
  const double star = min_dropped ? rng.uniform(m * 1.01, std::max(lambda1, lambda) * 1.5) : m * rng.uniform(0.1, 1.0);
  in.lambda.assign(in.p, lambda1);
  in.lambda.insert(in.lambda.end(), in.q, lambda);
  in.theta.assign(in.p, star);
  in.theta.insert(in.theta.end(), in.q, lambda);
  if (id == "thm8") {
    // Within GG, r_F/r_G can only increase on all of (0, inf) when the two
    // share beta and G has the smaller alpha; otherwise the small-t and
    // large-t tails pull the ratio in opposite directions.
    const bool ratio_dropped = cfg.dropped && *cfg.dropped == "ratio";
    const auto fp = *in.f->generalized_gamma();
    const double gb = ratio_dropped ? rng.uniform(0.05, 2.0) : fp.beta();
    const double ga = ratio_dropped ? rng.uniform(0.05, 2.0) : fp.alpha() * rng.uniform(0.1, 1.0);
    in.g = make_baseline(GeneralizedGammaParams(gb, std::max(ga, 0.025)));
  }
  return in;
}

const TheoremConclusion* find_conclusion(const std::vector<TheoremConclusion>& v, const std::string& id) {
  for (const auto& c : v) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace

FalsifyReport falsify(const FalsifyConfig& cfg) {
  if (cfg.trials < 1) throw UsageError("falsify: trials must be >= 1");
  if (cfg.dropped && *cfg.dropped != "min" && *cfg.dropped != "region" && *cfg.dropped != "ratio") {
    throw UsageError("falsify: dropped hypothesis must be 'min', 'region' or 'ratio'");
  }
  TheoremPlan plan = plan_for(cfg.theorem);
  if (cfg.alpha) plan.alpha = *cfg.alpha;
  if (cfg.beta) plan.beta = *cfg.beta;

  FalsifyReport rep;
  rep.theorem = cfg.theorem;
  rep.dropped = cfg.dropped;
  rep.trials = cfg.trials;
  // gamma-wsm asserts only alpha <= 1, where it is a special case of the weak-majorization rh result.
  const bool explore = cfg.dropped.has_value();
  rep.mode = explore ? "explore" : "assert";

  Rng rng(cfg.seed);
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const auto in = sample_instance(rng, cfg.theorem, plan, cfg);
    Analysis a;
    Grid grid;
    if (in.g) {
      const TwoBaselineModel x{in.f, in.g, in.p, in.lambda.front(), in.q, in.lambda.back()};
      const TwoBaselineModel y{in.f, in.g, in.p, in.theta.front(), in.q, in.theta.back()};
      grid = Grid::default_for(expand(x), expand(y));
      grid.points = cfg.grid_points;
      a = analyze(x, y, grid, cfg.tolerance);
    } else {
      const ScaleModel x(in.f, in.lambda);
      const ScaleModel y(in.f, in.theta);
      grid = Grid::default_for(x, y);
      grid.points = cfg.grid_points;
      a = analyze(x, y, grid, cfg.tolerance);
    }

    auto record_instance = [&](std::string detail) {
      rep.counterexamples.push_back({trial, in.f->describe(), in.g ? in.g->describe() : "", in.lambda, in.theta,
                                     std::move(detail)});
    };

    // The engine tags n = 2 block instances as thm3/thm4; accept either id for the block theorems.
    const std::string engine_id = cfg.theorem == "gamma-wsm" ? "thm2"
                                  : cfg.theorem == "thm7" && in.p == 1 && in.q == 1 ? "thm4"
                                                                                      : cfg.theorem;
    const auto* c = find_conclusion(a.theorems, engine_id);
    const auto& verdict = std::string(plan.claim) == "rh" ? a.comparison.rh : a.comparison.lr;
    rep.observed[std::string(plan.claim) + ":" + std::string(to_string(verdict.outcome))]++;
    if (std::string(plan.claim) == "lr") {
      rep.observed["rh_ratio_increasing:" + std::string(to_string(a.comparison.rh_ratio.outcome))]++;
    }

    if (a.contradiction) {
      // A verified theorem refuted by the grid is a counterexample in either mode.
      for (const auto& t : a.theorems) {
        if (t.contradicted()) record_instance(t.id + " predicted " + t.claim + " but the grid check fails");
      }
    }
    if (explore) {
      if (c) ++rep.hypotheses_met;
      continue;
    }
    if (!c) continue;  // hypotheses not certified on the grid (e.g. thm8 ratio); nothing to assert
    ++rep.hypotheses_met;
    ++rep.conclusions_checked;
    if (c->validation != Outcome::holds && !a.contradiction) {
      record_instance(c->id + " conclusion " + c->claim + " is " + std::string(to_string(c->validation)));
    }
  }
  return rep;
}

}  // namespace maxorder
