#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "maxorder/baseline.hpp"
#include "maxorder/errors.hpp"
#include "maxorder/majorization.hpp"
#include "maxorder/scale_model.hpp"

using namespace maxorder;
using V = std::vector<double>;

TEST_CASE("majorization examples") {
  CHECK(is_majorized_by(V{2, 2}, V{1, 3}));
  CHECK_FALSE(is_majorized_by(V{1, 3}, V{2, 2}));
  CHECK(is_majorized_by(V{1, 2, 3}, V{1, 2, 3}));
  CHECK(is_majorized_by(V{1, 3}, V{0.5, 3.5}));
}

TEST_CASE("weak supermajorization examples") {
  CHECK(is_weakly_supermajorized_by(V{1, 2}, V{0.5, 2}));
  CHECK_FALSE(is_weakly_supermajorized_by(V{0.5, 2}, V{1, 2}));
  CHECK_FALSE(is_majorized_by(V{1, 2}, V{0.5, 2}));
  const auto r = compare_majorization(V{1, 2}, V{0.5, 2});
  CHECK(r.prefix_sums_x == V{1, 3});
  CHECK(r.prefix_sums_y == V{0.5, 2.5});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(compare_majorization(V{1, 2}, V{1, 2, 3}), UsageError);
  CHECK_THROWS_AS(compare_majorization(V{}, V{}), UsageError);
  CHECK_THROWS_AS(compare_majorization(V{1, 0}, V{1, 2}), DomainError);
  CHECK_THROWS_AS(compare_majorization(V{1, 2}, V{-1, 2}), DomainError);
}

TEST_CASE("relations are reflexive, permutation invariant and nested") {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(0.1, 5.0);
  std::uniform_int_distribution<int> dim(1, 7);
  int majorized_pairs = 0;
  for (int i = 0; i < 1000; ++i) {
    V x(dim(gen));
    for (auto& v : x) v = u(gen);
    // Either an independent draw or a transfer of x, so both outcomes occur.
    V y = x;
    if (i % 2 == 0) {
      for (auto& v : y) v = u(gen);
    } else if (x.size() > 1) {
      std::sort(y.begin(), y.end());
      const double d = std::uniform_real_distribution<double>(0.0, 0.9)(gen) * y.front();
      y = robin_hood_transfer(y, 0, y.size() - 1, -d);
      std::swap(x, y);
    }
    CHECK(is_majorized_by(x, x));
    CHECK(is_weakly_supermajorized_by(x, x));
    const auto r = compare_majorization(x, y);
    if (r.majorized) {
      ++majorized_pairs;
      CHECK(r.weakly_supermajorized);
    }
    V px = x;
    V py = y;
    std::shuffle(px.begin(), px.end(), gen);
    std::shuffle(py.begin(), py.end(), gen);
    const auto rp = compare_majorization(px, py);
    CHECK(rp.majorized == r.majorized);
    CHECK(rp.weakly_supermajorized == r.weakly_supermajorized);
  }
  CHECK(majorized_pairs > 300);
}

TEST_CASE("robin hood transfers produce majorized vectors") {
  const V y{1.0, 4.0, 2.0};
  const auto x = robin_hood_transfer(y, 1, 0, 1.0);
  CHECK(x == V{2.0, 3.0, 2.0});
  CHECK(is_majorized_by(x, y));
  CHECK_THROWS(robin_hood_transfer(y, 5, 0, 1.0));
}

TEST_CASE("schur-convexity probe") {
  auto max_coord = [](std::span<const double> v) { return *std::max_element(v.begin(), v.end()); };
  CHECK(schur_convexity_probe(max_coord, 3, 1000, 1).consistent);
  auto neg_log_sum = [](std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s -= std::log(x);
    return s;
  };
  CHECK(schur_convexity_probe(neg_log_sum, 3, 1000, 2).consistent);

  const auto b = make_baseline({1.0, 1.0});
  auto rh_at_one = [&](std::span<const double> v) {
    return max_reverse_hazard(ScaleModel(b, V(v.begin(), v.end())), 1.0);
  };
  const auto r = schur_convexity_probe(rh_at_one, 3, 1000, 3);
  CHECK(r.consistent);
  CHECK(r.trials_run == 1000);

  // min is Schur-concave, so the probe must produce a witness.
  auto min_coord = [](std::span<const double> v) { return *std::min_element(v.begin(), v.end()); };
  const auto bad = schur_convexity_probe(min_coord, 3, 1000, 4);
  REQUIRE_FALSE(bad.consistent);
  REQUIRE(bad.witness);
  CHECK(is_majorized_by(bad.witness->x, bad.witness->y));
  CHECK(bad.witness->phi_x > bad.witness->phi_y);
}
