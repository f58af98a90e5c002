#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "maxorder/baseline.hpp"
#include "maxorder/errors.hpp"
#include "maxorder/order_checks.hpp"
#include "maxorder/scale_model.hpp"

using namespace maxorder;
using V = std::vector<double>;

namespace {

const auto kExp = make_baseline({1.0, 1.0});
const auto kGG = make_baseline({0.8, 0.5});

ScaleModel model(const std::shared_ptr<const Baseline>& b, V l) { return ScaleModel(b, std::move(l)); }

ScaleModel outlier(const std::shared_ptr<const Baseline>& b, std::size_t p, double l1, std::size_t q, double l) {
  return expand(OutlierModel{b, p, l1, q, l});
}

}  // namespace

TEST_CASE("grid construction") {
  const Grid g{1e-3, 50.0, 2000, Spacing::log};
  const auto t = g.abscissae();
  CHECK(t.size() == 2000);
  CHECK(t.front() == 1e-3);
  CHECK(t.back() == 50.0);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
  const auto lin = Grid{1.0, 2.0, 11, Spacing::linear}.abscissae();
  CHECK(lin[5] == doctest::Approx(1.5));

  CHECK(Grid::parse("0.01,10,500,lin") == Grid{0.01, 10.0, 500, Spacing::linear});
  CHECK(Grid::parse("1e-3,50,2000,log") == Grid{});
  CHECK_THROWS_AS(Grid::parse("1,0.5,10,log"), UsageError);
  CHECK_THROWS_AS(Grid::parse("0,1,10,log"), UsageError);
  CHECK_THROWS_AS(Grid::parse("0.1,1,1,log"), UsageError);
  CHECK_THROWS_AS(Grid::parse("0.1,1,10,cubic"), UsageError);
  CHECK_THROWS_AS(Grid::parse("0.1,1,10"), UsageError);

  const auto d = Grid::default_for(model(kExp, {0.5, 4.0}), model(kExp, {2.0, 2.0}));
  CHECK(d.t_min == doctest::Approx(1e-3 / 4.0));
  CHECK(d.t_max == doctest::Approx(50.0 / 0.5));
}

TEST_CASE("monotone certification") {
  const Grid g{0.1, 10.0, 100, Spacing::log};
  CHECK(check_monotone([](double t) { return t; }, g, Direction::increasing).holds());
  const auto v = check_monotone([](double t) { return -t; }, g, Direction::increasing);
  CHECK(v.outcome == Outcome::fails);
  REQUIRE(v.witness);
  const auto t = g.abscissae();
  CHECK(v.witness->t1 == t[0]);
  CHECK(v.witness->t2 == t[1]);
  CHECK(check_monotone([](double) { return 1.0; }, g, Direction::decreasing).holds());

  const auto fns = condition_functions(kGG);
  CHECK(check_monotone([&](double t) { return fns.psi(t); }, Grid{}, Direction::decreasing).holds());

  CHECK(check_monotone([](double) { return NAN; }, g, Direction::increasing).outcome == Outcome::inconclusive);
  CHECK(check_monotone([](double t) -> double { if (t > 1.0) throw std::runtime_error("x"); return t; }, g,
                       Direction::increasing)
            .outcome == Outcome::inconclusive);
}

TEST_CASE("relative tolerance absorbs rounding but not real decreases") {
  const Grid g{1.0, 2.0, 3, Spacing::linear};
  const V t = g.abscissae();
  CHECK(check_monotone_values(t, V{1e6, 1e6 * (1 - 1e-10), 1e6}, g, Direction::increasing).holds());
  CHECK(check_monotone_values(t, V{1e6, 1e6 * (1 - 1e-8), 1e6}, g, Direction::increasing).outcome ==
        Outcome::fails);
}

TEST_CASE("usual stochastic order") {
  const Grid g = Grid::default_for(model(kExp, {1, 3}), model(kExp, {0.5, 3.5}));
  CHECK(check_st(model(kGG, {1, 3}), model(kGG, {1, 3}), g).holds());
  CHECK(check_st(model(kExp, {1, 3}), model(kExp, {0.5, 3.5}), g).holds());
  const auto rev = check_st(model(kExp, {0.5, 3.5}), model(kExp, {1, 3}), g);
  CHECK(rev.outcome == Outcome::fails);
  CHECK(rev.witness);
}

TEST_CASE("reverse hazard order") {
  const Grid g = Grid::default_for(model(kGG, {1, 3}), model(kGG, {0.5, 3.5}));
  CHECK(check_rh(model(kGG, {1, 3}), model(kGG, {1, 3}), g).holds());
  const auto v = check_rh(model(kGG, {1, 3}), model(kGG, {0.5, 3.5}), g);
  CHECK(v.holds());
  REQUIRE(v.cross_check);
  CHECK(v.cross_check->holds());
  const auto gamma = make_baseline(make_special(SpecialFamily::gamma, 0.5));
  CHECK(check_rh(model(gamma, {1, 2}), model(gamma, {0.7, 2.1}),
                 Grid::default_for(model(gamma, {1, 2}), model(gamma, {0.7, 2.1})))
            .holds());
}

TEST_CASE("ratio of reverse hazards") {
  const Grid g = Grid::default_for(model(kExp, {1, 2}), model(kExp, {0.5, 2}));
  CHECK(check_rh_ratio_increasing(model(kExp, {1, 2}), model(kExp, {1, 2}), g).holds());
  CHECK(check_rh_ratio_increasing(model(kExp, {1, 2}), model(kExp, {0.5, 2}), g).holds());
  const auto x = outlier(kGG, 2, 1.0, 3, 2.0);
  const auto y = outlier(kGG, 2, 0.4, 3, 2.0);
  CHECK(check_rh_ratio_increasing(x, y, Grid::default_for(x, y)).holds());
}

TEST_CASE("likelihood ratio order") {
  const Grid g = Grid::default_for(model(kExp, {1, 2}), model(kExp, {0.5, 2}));
  CHECK(check_lr(model(kExp, {1, 2}), model(kExp, {1, 2}), g).holds());
  const auto v = check_lr(model(kExp, {1, 2}), model(kExp, {0.5, 2}), g);
  CHECK(v.holds());
  REQUIRE(v.cross_check);
  CHECK(v.cross_check->holds());
  REQUIRE(v.composed);
  CHECK(*v.composed == Outcome::holds);

  const auto w = make_baseline(make_special(SpecialFamily::weibull, 0.5));
  const auto x = outlier(w, 1, 2.0, 2, 1.0);
  const auto y = outlier(w, 1, 0.5, 2, 1.0);
  CHECK(check_lr(x, y, Grid::default_for(x, y)).holds());

  // Reversing a strict lr pair refutes it.
  CHECK(check_lr(model(kExp, {0.5, 2}), model(kExp, {1, 2}), g).outcome == Outcome::fails);
}

TEST_CASE("underflowed densities are excluded from the direct lr check") {
  const auto x = model(kExp, {1, 2});
  const Grid far{1e-3, 2000.0, 400, Spacing::log};
  const auto v = check_lr(x, x, far);
  CHECK(v.holds());
  REQUIRE(v.cross_check);
  CHECK(v.cross_check->excluded_points > 0);
}

TEST_CASE("composition of rh with an increasing ratio") {
  const Grid g{0.1, 1.0, 10, Spacing::log};
  OrderVerdict rh;
  rh.order = Order::rh;
  rh.grid = g;
  MonotoneVerdict ratio;
  ratio.grid = g;

  rh.outcome = Outcome::holds;
  ratio.outcome = Outcome::holds;
  CHECK(lr_from_rh(rh, ratio).outcome == Outcome::holds);

  rh.outcome = Outcome::fails;
  CHECK(lr_from_rh(rh, ratio).outcome == Outcome::inconclusive);

  rh.outcome = Outcome::holds;
  ratio.outcome = Outcome::fails;
  ratio.witness = Witness{0.2, 0.3, 1.0, 0.5};
  const auto c = lr_from_rh(rh, ratio);
  CHECK(c.outcome == Outcome::inconclusive);
  REQUIRE(c.witness);
  CHECK(c.witness->t1 == 0.2);

  ratio.grid = Grid{0.1, 2.0, 10, Spacing::log};
  CHECK_THROWS_AS(lr_from_rh(rh, ratio), UsageError);
}

TEST_CASE("ratio of baseline reverse hazards") {
  const Grid g{1e-3, 50.0, 2000, Spacing::log};
  CHECK(check_rf_over_rg_increasing(*kGG, *kGG, g).holds());
  CHECK(check_rf_over_rg_increasing(*make_baseline({1.0, 1.0}), *make_baseline({1.0, 0.5}), g).holds());
  // Both psi start flat at alpha; F's correction t^{1/2} dominates G's t near zero.
  CHECK(check_rf_over_rg_increasing(*make_baseline({0.5, 0.5}), *make_baseline({1.0, 1.0}), g).outcome ==
        Outcome::fails);
}

TEST_CASE("properties on random pairs") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> shape(0.1, 2.0);
  std::uniform_real_distribution<double> lam(0.2, 5.0);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int i = 0; i < 40; ++i) {
    const auto b = make_baseline({shape(gen), shape(gen)});
    const int n = dim(gen);
    V lx(n), ly(n);
    for (auto& v : lx) v = lam(gen);
    for (auto& v : ly) v = lam(gen);
    const ScaleModel x(b, lx);
    const ScaleModel y(b, ly);
    const Grid g = Grid::default_for(x, y);
    CAPTURE(x.describe());
    CAPTURE(y.describe());
    const auto c = compare_orders(x, y, g);

    // lr => rh => st.
    if (c.lr.holds()) CHECK(c.rh.outcome != Outcome::fails);
    if (c.rh.holds()) CHECK(c.st.outcome != Outcome::fails);

    // Common rescaling of both models and the grid leaves verdicts unchanged.
    for (double k : {2.0, 0.5}) {
      V sx = lx, sy = ly;
      for (auto& v : sx) v *= k;
      for (auto& v : sy) v *= k;
      const auto s = compare_orders(ScaleModel(b, sx), ScaleModel(b, sy), g.scaled(1.0 / k));
      CHECK(s.st.outcome == c.st.outcome);
      CHECK(s.rh.outcome == c.rh.outcome);
      CHECK(s.lr.outcome == c.lr.outcome);
    }

    // A strict rh gap refutes the reverse comparison.
    if (c.rh.holds() && c.rh.largest_gap > 10 * kDefaultTolerance) {
      CHECK(check_rh(y, x, g).outcome == Outcome::fails);
    }
  }
}
