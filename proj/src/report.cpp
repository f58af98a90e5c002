#include "maxorder/report.hpp"

#include <cmath>

namespace maxorder {
namespace {

using nlohmann::json;

// JSON has no infinities; encode them as strings rather than null.
json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

json to_json(const Grid& g) {
  return {{"t_min", number(g.t_min)},
          {"t_max", number(g.t_max)},
          {"points", g.points},
          {"spacing", std::string(to_string(g.spacing))}};
}

json to_json(const Witness& w) {
  return {{"t1", number(w.t1)}, {"t2", number(w.t2)}, {"v1", number(w.v1)}, {"v2", number(w.v2)}};
}

json to_json(const MonotoneVerdict& v) {
  json j = {{"outcome", std::string(to_string(v.outcome))},
            {"direction", std::string(to_string(v.direction))},
            {"tolerance", v.tolerance},
            {"grid", to_json(v.grid)},
            {"quantity", v.quantity}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.excluded_points) j["excluded_points"] = v.excluded_points;
  return j;
}

json to_json(const OrderVerdict& v) {
  json j = {{"order", std::string(to_string(v.order))},
            {"outcome", std::string(to_string(v.outcome))},
            {"tolerance", v.tolerance},
            {"grid", to_json(v.grid)},
            {"extremal_gap", number(v.extremal_gap)},
            {"extremal_gap_t", number(v.extremal_gap_t)},
            {"largest_gap", number(v.largest_gap)},
            {"largest_gap_t", number(v.largest_gap_t)}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.notes.empty()) j["notes"] = v.notes;
  if (v.cross_check) j[v.order == Order::lr ? "direct" : "cdf_ratio_check"] = to_json(*v.cross_check);
  if (v.rh_ratio) j["rh_ratio"] = to_json(*v.rh_ratio);
  if (v.composed) j["composed"] = std::string(to_string(*v.composed));
  return j;
}

json to_json(const MajorizationRelation& r) {
  return {{"majorized", r.majorized},
          {"weakly_supermajorized", r.weakly_supermajorized},
          {"prefix_sums_x", r.prefix_sums_x},
          {"prefix_sums_y", r.prefix_sums_y},
          {"total_x", r.total_x},
          {"total_y", r.total_y},
          {"tolerance", r.tolerance},
          {"direction",
           "x <=m y: sums of the j smallest entries of x are >= those of y for j < n and totals are equal; "
           "x <=w y: the same inequalities for every j = 1..n, totals unconstrained"}};
}

json to_json(const ConditionReport& r) {
  json j = {{"baseline", r.baseline},
            {"grid", to_json(r.grid)},
            {"psi_decreasing", to_json(r.psi_decreasing)},
            {"chi_increasing", to_json(r.chi_increasing)},
            {"eta_increasing", to_json(r.eta_increasing)},
            {"applicable_theorems", r.applicable_theorems},
            {"annotations", r.annotations},
            {"all_hold", r.all_hold()}};
  json expected = json::object();
  if (r.expect_psi_decreasing) expected["psi_decreasing"] = *r.expect_psi_decreasing;
  if (r.expect_chi_increasing) expected["chi_increasing"] = *r.expect_chi_increasing;
  if (r.expect_eta_increasing) expected["eta_increasing"] = *r.expect_eta_increasing;
  j["analytic_expectations"] = expected;
  return j;
}

json to_json(const TheoremConclusion& c) {
  json j = {{"id", c.id},
            {"claim", c.claim},
            {"hypotheses", c.hypotheses},
            {"validation", std::string(to_string(c.validation))},
            {"contradiction", c.contradicted()}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  return j;
}

json to_json(const Comparison& c) {
  return {{"st", to_json(c.st)}, {"rh", to_json(c.rh)}, {"lr", to_json(c.lr)}, {"rh_ratio", to_json(c.rh_ratio)}};
}

json to_json(const Analysis& a) {
  json j = {{"grid", to_json(a.grid)},
            {"majorization", to_json(a.majorization)},
            {"orders", to_json(a.comparison)},
            {"contradiction", a.contradiction}};
  json conds = json::array();
  for (const auto& c : a.conditions) conds.push_back(to_json(c));
  j["conditions"] = conds;
  json thms = json::array();
  for (const auto& t : a.theorems) thms.push_back(to_json(t));
  j["theorems"] = thms;
  if (a.rf_over_rg) j["rf_over_rg"] = to_json(*a.rf_over_rg);
  return j;
}

json to_json(const FalsifyReport& r) {
  json ces = json::array();
  for (const auto& c : r.counterexamples) {
    ces.push_back({{"trial", c.trial},
                   {"baseline", c.baseline},
                   {"baseline_g", c.baseline_g},
                   {"lambda", c.lambda},
                   {"theta", c.theta},
                   {"detail", c.detail}});
  }
  json j = {{"theorem", r.theorem},
            {"mode", r.mode},
            {"trials", r.trials},
            {"hypotheses_met", r.hypotheses_met},
            {"conclusions_checked", r.conclusions_checked},
            {"observed", r.observed},
            {"counterexamples", ces},
            {"no_counterexample", r.no_counterexample()}};
  if (r.dropped) j["dropped"] = *r.dropped;
  return j;
}

json to_json(const McStReport& r) {
  return {{"count_x", r.count_x},
          {"count_y", r.count_y},
          {"seed", r.seed},
          {"levels", r.levels},
          {"max_violation", number(r.max_violation)},
          {"violation_t", number(r.violation_t)},
          {"band", r.band},
          {"violated", r.violated}};
}

}  // namespace maxorder
