#include "maxorder/conditions.hpp"

#include <sstream>

namespace maxorder {
namespace {

std::string real(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void compare_with_expectation(ConditionReport& r, const std::optional<bool>& expected, const MonotoneVerdict& v,
                              const char* name) {
  if (!expected || v.outcome == Outcome::inconclusive) return;
  if (*expected && !v.holds()) {
    r.annotations.push_back(std::string("grid refutes the analytic expectation that ") + name +
                            "; check tolerance or grid");
  }
}

}  // namespace

std::vector<std::string> theorems_enabled_by(const MonotoneVerdict& psi, const MonotoneVerdict& chi,
                                             const MonotoneVerdict& eta) {
  std::vector<std::string> out;
  if (chi.holds()) out.emplace_back("thm1");
  if (psi.holds() && chi.holds()) out.emplace_back("thm2");
  if (psi.holds() && eta.holds()) {
    out.emplace_back("thm3");
    out.emplace_back("thm6");
    out.emplace_back("thm8");
  }
  if (psi.holds() && eta.holds() && chi.holds()) {
    out.emplace_back("thm4");
    out.emplace_back("corollary");
    out.emplace_back("thm7");
  }
  return out;
}

ConditionReport verify_conditions(const std::shared_ptr<const Baseline>& baseline, const Grid& grid,
                                  double tolerance) {
  const ConditionFunctions fns(baseline);
  ConditionReport r;
  r.baseline = baseline->describe();
  r.grid = grid;
  r.psi_decreasing = check_monotone([&](double t) { return fns.psi(t); }, grid, Direction::decreasing, tolerance);
  r.psi_decreasing.quantity = "t r(t)";
  r.chi_increasing = check_monotone([&](double t) { return fns.chi(t); }, grid, Direction::increasing, tolerance);
  r.chi_increasing.quantity = "t^2 r'(t)";
  r.eta_increasing = check_monotone([&](double t) { return fns.eta(t); }, grid, Direction::increasing, tolerance);
  r.eta_increasing.quantity = "-t r'(t)/r(t)";
  r.applicable_theorems = theorems_enabled_by(r.psi_decreasing, r.chi_increasing, r.eta_increasing);

  if (const auto gg = baseline->generalized_gamma()) {
    const double a = gg->alpha();
    const double b = gg->beta();
    r.expect_psi_decreasing = true;
    r.annotations.push_back("t r(t) is decreasing for every GG(beta, alpha)");
    if (b <= 1.0) {
      r.expect_chi_increasing = true;
      r.annotations.push_back("beta=" + real(b) + " <= 1: t^2 r'(t) increasing is guaranteed");
    } else {
      r.annotations.push_back("beta=" + real(b) + " > 1: t^2 r'(t) region (beta <= 1) not satisfied; grid verdict only");
    }
    if (a <= b) {
      r.expect_eta_increasing = true;
      r.annotations.push_back("alpha=" + real(a) + " <= beta=" + real(b) +
                              ": t r'(t)/r(t) decreasing is guaranteed");
    } else {
      r.annotations.push_back("alpha=" + real(a) + " > beta=" + real(b) +
                              ": no guarantee for t r'(t)/r(t); grid verdict only");
    }
    compare_with_expectation(r, r.expect_psi_decreasing, r.psi_decreasing, "t r(t) is decreasing");
    compare_with_expectation(r, r.expect_chi_increasing, r.chi_increasing, "t^2 r'(t) is increasing");
    compare_with_expectation(r, r.expect_eta_increasing, r.eta_increasing, "t r'(t)/r(t) is decreasing");
  }
  return r;
}

}  // namespace maxorder
