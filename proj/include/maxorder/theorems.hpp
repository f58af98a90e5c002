#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxorder/conditions.hpp"
#include "maxorder/majorization.hpp"
#include "maxorder/order_checks.hpp"
#include "maxorder/scale_model.hpp"

namespace maxorder {

/// One conclusion emitted by the theorem engine together with its grid validation.
struct TheoremConclusion {
  std::string id;     ///< thm1, thm2, thm3, thm4, corollary, thm6, thm7 or thm8
  std::string claim;  ///< "rh", "lr" or "rh_ratio_increasing"
  std::vector<std::string> hypotheses;
  Outcome validation = Outcome::holds;
  std::optional<Witness> witness;

  bool contradicted() const noexcept { return validation == Outcome::fails; }
};

/// X has p copies of lambda1 and q of lambda; Y has p copies of lambda1_star and q of lambda.
struct OutlierStructure {
  std::size_t p;
  std::size_t q;
  double lambda1;
  double lambda1_star;
  double lambda;
};

/// Finds a block decomposition of (x, y) with lambda1_star = min(lambda, lambda1, lambda1_star).
std::optional<OutlierStructure> detect_outlier_pair(std::span<const double> x, std::span<const double> y);

/// Emits every conclusion whose hypotheses are certified by `report` (conditions of the
/// common baseline on the baseline grid) and the parameter facts of (x, y), and
/// validates each against `cmp`. Never throws on contradiction; see applicable_theorems.
std::vector<TheoremConclusion> evaluate_theorems(const ScaleModel& x, const ScaleModel& y,
                                                 const ConditionReport& report, const Comparison& cmp);

/// Two-baseline variant: conditions of F, the r_F/r_G ratio verdict and the block structure.
std::vector<TheoremConclusion> evaluate_theorems(const TwoBaselineModel& x, const TwoBaselineModel& y,
                                                 const ConditionReport& report_f,
                                                 const MonotoneVerdict& rf_over_rg, const Comparison& cmp);

/// Computes the comparison on `grid`, evaluates the theorems and throws
/// ContradictionError if any emitted conclusion is refuted.
std::vector<TheoremConclusion> applicable_theorems(const ScaleModel& x, const ScaleModel& y,
                                                   const ConditionReport& report, const Grid& grid,
                                                   double tolerance = kDefaultTolerance);

/// Full analysis of a pair of systems.
struct Analysis {
  Grid grid;
  MajorizationRelation majorization;
  std::vector<ConditionReport> conditions;  ///< common baseline, or F then G
  std::optional<MonotoneVerdict> rf_over_rg;
  Comparison comparison;
  std::vector<TheoremConclusion> theorems;
  bool contradiction = false;
};

Analysis analyze(const ScaleModel& x, const ScaleModel& y, const Grid& grid, double tolerance = kDefaultTolerance);
Analysis analyze(const TwoBaselineModel& x, const TwoBaselineModel& y, const Grid& grid,
                 double tolerance = kDefaultTolerance);

// ---------------------------------------------------------------------------
// Randomized validation

struct Range {
  double lo;
  double hi;
};

struct FalsifyConfig {
  /// thm1, thm2, thm4, corollary, thm7, thm8 or gamma-wsm.
  std::string theorem = "thm2";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Hypothesis deliberately dropped (explore mode): "min", "region" or "ratio".
  std::optional<std::string> dropped;
  std::optional<Range> alpha;
  std::optional<Range> beta;
  std::optional<Range> lambda;
  std::size_t grid_points = 2000;
  double tolerance = kDefaultTolerance;
};

struct FalsifyInstance {
  std::size_t trial;
  std::string baseline;
  std::string baseline_g;
  std::vector<double> lambda;
  std::vector<double> theta;
  std::string detail;
};

struct FalsifyReport {
  std::string theorem;
  std::string mode;  ///< "assert" or "explore"
  std::optional<std::string> dropped;
  std::size_t trials = 0;
  std::size_t hypotheses_met = 0;
  std::size_t conclusions_checked = 0;
  /// Tally of observed verdicts, keyed like "lr:holds".
  std::map<std::string, std::size_t> observed;
  std::vector<FalsifyInstance> counterexamples;

  bool no_counterexample() const noexcept { return counterexamples.empty(); }
};

/// Samples random parameters for `config.theorem`. With every hypothesis in
/// place each certified instance must satisfy the conclusion; a failure is a
/// counterexample. With a hypothesis dropped the verdicts are only tallied.
FalsifyReport falsify(const FalsifyConfig& config);

}  // namespace maxorder
