#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "maxorder/baseline.hpp"
#include "maxorder/order_checks.hpp"

namespace maxorder {

/// Grid verdicts for the three analytic preconditions on a baseline:
/// t r(t) decreasing, t^2 r'(t) increasing, and -t r'(t)/r(t) increasing
/// (equivalently t r'(t)/r(t) decreasing).
struct ConditionReport {
  std::string baseline;
  Grid grid;
  MonotoneVerdict psi_decreasing;
  MonotoneVerdict chi_increasing;
  MonotoneVerdict eta_increasing;
  /// Theorem ids whose baseline hypotheses are certified by the three verdicts.
  std::vector<std::string> applicable_theorems;
  /// Known analytic regions for GG baselines, and any disagreement with the grid.
  std::vector<std::string> annotations;
  /// GG analytic expectations (unset when no guarantee is known).
  std::optional<bool> expect_psi_decreasing;
  std::optional<bool> expect_chi_increasing;
  std::optional<bool> expect_eta_increasing;

  bool all_hold() const noexcept {
    return psi_decreasing.holds() && chi_increasing.holds() && eta_increasing.holds();
  }
};

ConditionReport verify_conditions(const std::shared_ptr<const Baseline>& baseline, const Grid& grid,
                                  double tolerance = kDefaultTolerance);

/// Baseline-hypothesis gate: ids from {thm1, thm2, thm3, thm4, corollary, thm6, thm7, thm8}.
std::vector<std::string> theorems_enabled_by(const MonotoneVerdict& psi_decreasing,
                                             const MonotoneVerdict& chi_increasing,
                                             const MonotoneVerdict& eta_increasing);

}  // namespace maxorder
