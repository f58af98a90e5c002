// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <boost/math/differentiation/finite_difference.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "maxorder/baseline.hpp"
#include "maxorder/errors.hpp"
#include "maxorder/majorization.hpp"
#include "maxorder/oracle.hpp"
#include "maxorder/order_checks.hpp"
#include "maxorder/scale_model.hpp"
#include "maxorder/theorems.hpp"

using namespace maxorder;
using V = std::vector<double>;

namespace {

struct Outcome_ {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

std::mt19937_64& gen() {
  static std::mt19937_64 g(20240611);
  return g;
}

double uni(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen()); }
double log_uni(double lo, double hi) { return std::exp(uni(std::log(lo), std::log(hi))); }
int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen()); }

// Shape draws stay away from zero; (0, 2] is sampled as [0.05, 2].
constexpr double kShapeLo = 0.05;

// Instances gathered by criteria 5-8 for the hierarchy check.
std::vector<Comparison> g_instances;

// ---------------------------------------------------------------------------

Outcome_ special_cases() {
  const Grid grid;
  const auto t = grid.abscissae();
  double worst = 0.0;
  std::size_t compared = 0;
  auto cmp = [&](double got, double want) {
    if (want > 1e-300) {
      worst = std::max(worst, rel_err(got, want));
      ++compared;
    } else if (got > 1e-290) {
      worst = std::max(worst, 1.0);
    }
  };
  for (double u : t) {
    const GeneralizedGammaParams e(1.0, 1.0);
    cmp(gg_pdf(e, u), std::exp(-u));
    cmp(gg_cdf(e, u), -std::expm1(-u));
  }
  for (double a : {0.3, 0.5, 1.0, 2.0}) {
    const GeneralizedGammaParams g(1.0, a);
    const GeneralizedGammaParams w(a, a);
    for (double u : t) {
      cmp(gg_pdf(g, u), std::pow(u, a - 1.0) * std::exp(-u) / std::tgamma(a));
      cmp(gg_cdf(g, u), boost::math::gamma_p(a, u));
      cmp(gg_pdf(w, u), a * std::pow(u, a - 1.0) * std::exp(-std::pow(u, a)));
      cmp(gg_cdf(w, u), -std::expm1(-std::pow(u, a)));
    }
  }
  return {worst <= 1e-12, fmt("max relative error %.2e over %.0f values", worst, double(compared))};
}

Outcome_ derivative_identity() {
  // t r'/r = d log r / d log t, differentiated numerically; compared with
  // (alpha - 1 - beta t^beta) - t r(t).
  double worst = 0.0;
  const auto t = Grid{}.abscissae();
  for (int i = 0; i < 20; ++i) {
    const GeneralizedGammaParams p(uni(kShapeLo, 2.0), uni(kShapeLo, 2.0));
    for (double u : t) {
      auto log_r = [&](double s) { return gg_log_reverse_hazard(p, std::exp(s)); };
      const double lhs = boost::math::differentiation::finite_difference_derivative<decltype(log_r), double, 8>(
          log_r, std::log(u));
      const double rhs = p.alpha() - 1.0 - p.beta() * std::pow(u, p.beta()) - u * gg_reverse_hazard(p, u);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0));
    }
  }
  return {worst <= 1e-8, fmt("max relative deviation %.2e (20 parameter pairs x 2000 points)", worst)};
}

Outcome_ condition_regions() {
  const Grid grid;
  int chi_fail = 0, eta_fail = 0, psi_fail = 0;
  for (int i = 0; i < 50; ++i) {
    const auto b = make_baseline({uni(kShapeLo, 1.0), uni(kShapeLo, 2.0)});
    const auto f = condition_functions(b);
    chi_fail += !check_monotone([&](double t) { return f.chi(t); }, grid, Direction::increasing).holds();
  }
  for (int i = 0; i < 50; ++i) {
    const double beta = uni(kShapeLo, 2.0);
    const auto b = make_baseline({beta, uni(0.5 * kShapeLo, beta)});
    const auto f = condition_functions(b);
    eta_fail += !check_monotone([&](double t) { return f.eta(t); }, grid, Direction::increasing).holds();
  }
  for (int i = 0; i < 50; ++i) {
    const auto b = make_baseline({uni(kShapeLo, 2.0), uni(kShapeLo, 2.0)});
    const auto f = condition_functions(b);
    psi_fail += !check_monotone([&](double t) { return f.psi(t); }, grid, Direction::decreasing).holds();
  }
  std::ostringstream os;
  os << "failures: chi " << chi_fail << "/50, eta " << eta_fail << "/50, psi " << psi_fail << "/50";
  return {chi_fail + eta_fail + psi_fail == 0, os.str()};
}

Outcome_ small_t_limit() {
  // |t r(t)/alpha - 1| ~ t^beta/(alpha/beta + 1) at t = 1e-6, so beta is drawn
  // from [0.5, 2]; below that the bound is not reachable at this t.
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto b = make_baseline({uni(0.5, 2.0), uni(kShapeLo, 2.0)});
    const double a = b->generalized_gamma()->alpha();
    worst = std::max(worst, rel_err(condition_functions(b).psi(1e-6), a));
  }
  return {worst <= 1e-3, fmt("max relative gap %.2e (beta in [0.5,2], alpha in [0.05,2])", worst)};
}

V random_lambdas(int n) {
  V v(n);
  for (auto& x : v) x = log_uni(0.2, 5.0);
  return v;
}

Outcome_ weak_supermajorization_rh() {
  int holds = 0, contradictions = 0, not_wsm = 0;
  for (int i = 0; i < 100; ++i) {
    const auto b = make_baseline({uni(kShapeLo, 1.0), uni(kShapeLo, 2.0)});
    const int n = pick(2, 6);
    V lambda = random_lambdas(n);
    V theta = lambda;
    std::sort(theta.begin(), theta.end());
    theta[pick(0, n - 1)] *= uni(0.3, 1.0);
    not_wsm += !is_weakly_supermajorized_by(lambda, theta);
    const ScaleModel x(b, lambda), y(b, theta);
    const auto a = analyze(x, y, Grid::default_for(x, y));
    holds += a.comparison.rh.holds();
    contradictions += a.contradiction;
    g_instances.push_back(a.comparison);
  }
  std::ostringstream os;
  os << "rh holds " << holds << "/100, contradictions " << contradictions << ", malformed pairs " << not_wsm;
  return {holds == 100 && contradictions == 0 && not_wsm == 0, os.str()};
}

std::shared_ptr<const Baseline> region_baseline() {
  const double beta = uni(kShapeLo, 1.0);
  return make_baseline({beta, uni(0.5 * kShapeLo, beta)});
}

Outcome_ two_component_lr() {
  int direct = 0, composed = 0, agree = 0, contradictions = 0;
  for (int i = 0; i < 100; ++i) {
    const auto b = region_baseline();
    const double l1 = log_uni(0.2, 5.0), l = log_uni(0.2, 5.0);
    const double star = std::min(l1, l) * uni(0.1, 1.0);
    const ScaleModel x(b, {l1, l}), y(b, {star, l});
    const auto a = analyze(x, y, Grid::default_for(x, y));
    const auto& lr = a.comparison.lr;
    const bool d = lr.cross_check && lr.cross_check->holds();
    const bool c = lr.composed && *lr.composed == Outcome::holds;
    direct += d;
    composed += c;
    agree += d == c;
    contradictions += a.contradiction;
    g_instances.push_back(a.comparison);
  }
  std::ostringstream os;
  os << "direct " << direct << "/100, composed " << composed << "/100, agree " << agree << "/100, contradictions "
     << contradictions;
  return {direct == 100 && composed == 100 && agree == 100 && contradictions == 0, os.str()};
}

Outcome_ multiple_outlier_lr() {
  int lr = 0, ratio = 0;
  for (int i = 0; i < 50; ++i) {
    const auto b = region_baseline();
    const std::size_t p = pick(1, 5), q = pick(1, 5);
    const double l1 = log_uni(0.2, 5.0), l = log_uni(0.2, 5.0);
    const double star = std::min(l1, l) * uni(0.1, 1.0);
    const auto x = expand(OutlierModel{b, p, l1, q, l});
    const auto y = expand(OutlierModel{b, p, star, q, l});
    const auto a = analyze(x, y, Grid::default_for(x, y));
    lr += a.comparison.lr.holds();
    ratio += a.comparison.rh_ratio.holds();
    g_instances.push_back(a.comparison);
  }
  std::ostringstream os;
  os << "lr holds " << lr << "/50, rh ratio increasing " << ratio << "/50";
  return {lr == 50 && ratio == 50, os.str()};
}

Outcome_ common_scale_lr() {
  int lr = 0;
  for (int i = 0; i < 50; ++i) {
    const auto b = region_baseline();
    const double l1 = log_uni(0.2, 5.0), l2 = log_uni(0.2, 5.0);
    const double c = std::min(l1, l2) * uni(0.1, 1.0);
    const ScaleModel x(b, {l1, l2}), y(b, {c, c});
    const auto a = analyze(x, y, Grid::default_for(x, y));
    lr += a.comparison.lr.holds();
    g_instances.push_back(a.comparison);
  }
  return {lr == 50, "lr holds " + std::to_string(lr) + "/50"};
}

Outcome_ hierarchy() {
  int violations = 0;
  for (const auto& c : g_instances) {
    if (c.lr.holds() && c.rh.outcome == Outcome::fails) ++violations;
    if (c.rh.holds() && c.st.outcome == Outcome::fails) ++violations;
  }
  return {violations == 0 && g_instances.size() == 300,
          std::to_string(violations) + " violations over " + std::to_string(g_instances.size()) + " instances"};
}

Outcome_ monte_carlo() {
  double worst = 0.0;
  bool identical = true;
  for (int i = 0; i < 10; ++i) {
    const auto b = make_baseline({uni(0.3, 2.0), uni(0.3, 2.0)});
    const ScaleModel m(b, random_lambdas(pick(1, 5)));
    const std::uint64_t seed = 1000 + i;
    const auto batch = sample_max(m, 10000, seed);
    worst = std::max(worst, sup_distance(batch, m));
    std::ostringstream a, c;
    write_csv(a, batch);
    write_csv(c, sample_max(m, 10000, seed));
    identical = identical && a.str() == c.str();
  }
  return {worst < 0.02 && identical,
          fmt("max sup distance %.4f at 1e4 samples; reruns ", worst) + (identical ? "identical" : "differ")};
}

Outcome_ majorization_algebra() {
  int bad = 0, majorized = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = pick(1, 8);
    V x(n), y(n);
    for (auto& v : x) v = uni(0.1, 5.0);
    if (i % 2) {
      // y spreads x by transfers, so x <=m y.
      y = x;
      for (int k = 0; k < 3 && n > 1; ++k) {
        std::sort(y.begin(), y.end());
        y = robin_hood_transfer(y, 0, n - 1, uni(0.0, 0.9) * y.front());
      }
    } else {
      for (auto& v : y) v = uni(0.1, 5.0);
    }
    const auto r = compare_majorization(x, y);
    majorized += r.majorized;
    if (r.majorized && !r.weakly_supermajorized) ++bad;
    if (!is_majorized_by(x, x) || !is_weakly_supermajorized_by(x, x)) ++bad;
    V px = x, py = y;
    std::shuffle(px.begin(), px.end(), gen());
    std::shuffle(py.begin(), py.end(), gen());
    const auto rp = compare_majorization(px, py);
    if (rp.majorized != r.majorized || rp.weakly_supermajorized != r.weakly_supermajorized) ++bad;
  }
  const V a{1.0, 2.0}, b{0.5, 2.0};
  const bool witness = is_weakly_supermajorized_by(a, b) && !is_majorized_by(a, b);
  std::ostringstream os;
  os << bad << " violations in 1000 pairs (" << majorized << " majorized); (1,2) vs (0.5,2) "
     << (witness ? "w but not m" : "wrong");
  return {bad == 0 && witness, os.str()};
}

Outcome_ schur_probe() {
  int failures = 0;
  std::size_t transfers = 0;
  for (const auto& p : {GeneralizedGammaParams(1.0, 1.0), GeneralizedGammaParams(0.8, 0.5)}) {
    const auto b = make_baseline(p);
    for (double t0 : {0.5, 1.0, 2.0}) {
      auto phi = [&](std::span<const double> l) { return max_reverse_hazard(ScaleModel(b, V(l.begin(), l.end())), t0); };
      const auto r = schur_convexity_probe(phi, 3, 1000, 77);
      failures += !r.consistent;
      transfers += r.trials_run;
    }
  }
  return {failures == 0, std::to_string(failures) + " inconsistent of 6 probes, " + std::to_string(transfers) +
                             " transfers"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome_()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "special-case equivalence", special_cases},
      {2, "reverse hazard derivative identity", derivative_identity},
      {3, "condition regions", condition_regions},
      {4, "t r(t) limit at zero", small_t_limit},
      {5, "weak supermajorization gives rh", weak_supermajorization_rh},
      {6, "two-component lr, direct and composed", two_component_lr},
      {7, "multiple-outlier lr", multiple_outlier_lr},
      {8, "common-scale lr", common_scale_lr},
      {9, "order hierarchy", hierarchy},
      {10, "Monte Carlo consistency", monte_carlo},
      {11, "majorization algebra", majorization_algebra},
      {12, "Schur-convexity probe", schur_probe},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome_ r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d  %-40s %s [%.1fs]\n", r.pass ? "PASS" : "FAIL", c.id, c.name, r.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
