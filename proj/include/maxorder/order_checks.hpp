#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxorder/baseline.hpp"
#include "maxorder/scale_model.hpp"

namespace maxorder {

enum class Spacing { log, linear };

/// Finite abscissa set on which monotonicity and pointwise orders are certified.
/// A verdict computed on a grid means "no violation at these points", never a proof.
struct Grid {
  double t_min = 1e-3;
  double t_max = 50.0;
  std::size_t points = 2000;
  Spacing spacing = Spacing::log;

  /// Throws UsageError unless 0 < t_min < t_max, both finite, and points >= 2.
  void validate() const;
  std::vector<double> abscissae() const;
  /// Every abscissa multiplied by `factor`.
  Grid scaled(double factor) const;

  bool operator==(const Grid&) const = default;

  /// t_min = 1e-3 / lambda_max, t_max = 50 / lambda_min over both models, 2000 log points.
  static Grid default_for(const ScaleModel& x, const ScaleModel& y);
  static Grid default_for(const ScaleModel& x);
  /// "tmin,tmax,points,log|lin".
  static Grid parse(std::string_view text);
};

/// The baseline-argument range reached by lambda * t for t on `model_grid`.
Grid baseline_grid(const Grid& model_grid, double lambda_min, double lambda_max);

std::string_view to_string(Spacing s);

enum class Outcome { holds, fails, inconclusive };
enum class Direction { increasing, decreasing };
enum class Order { st, rh, lr };

std::string_view to_string(Outcome o);
std::string_view to_string(Direction d);
std::string_view to_string(Order o);

/// Two abscissae and the values that violate a claim. Pointwise checks use t1 == t2.
struct Witness {
  double t1;
  double t2;
  double v1;
  double v2;
};

constexpr double kDefaultTolerance = 1e-9;

struct MonotoneVerdict {
  Outcome outcome = Outcome::holds;
  Direction direction = Direction::increasing;
  double tolerance = kDefaultTolerance;
  Grid grid;
  std::string quantity;
  std::optional<Witness> witness;
  std::string reason;               ///< why the verdict is inconclusive
  std::size_t excluded_points = 0;  ///< grid points dropped (underflow)

  bool holds() const noexcept { return outcome == Outcome::holds; }
};

struct OrderVerdict {
  Order order = Order::st;
  Outcome outcome = Outcome::holds;
  double tolerance = kDefaultTolerance;
  Grid grid;
  std::optional<Witness> witness;
  std::string reason;
  /// Smallest log-scale margin in favour of the order and where it occurs.
  double extremal_gap = 0.0;
  double extremal_gap_t = 0.0;
  /// Largest margin and where it occurs.
  double largest_gap = 0.0;
  double largest_gap_t = 0.0;
  std::vector<std::string> notes;
  /// rh: monotonicity of F_Y/F_X. lr: the direct density-ratio check.
  std::optional<MonotoneVerdict> cross_check;
  /// lr only: the rh-ratio monotonicity used by the composition rule.
  std::optional<MonotoneVerdict> rh_ratio;
  /// lr only: outcome of lr_from_rh.
  std::optional<Outcome> composed;

  bool holds() const noexcept { return outcome == Outcome::holds; }
};

/// Adjacent grid values may move against `direction` by at most
/// tolerance * max(|v1|, |v2|, 1). The first violating pair (in increasing t)
/// is the witness. Evaluation errors and non-finite values give inconclusive.
MonotoneVerdict check_monotone(const std::function<double(double)>& g, const Grid& grid, Direction direction,
                               double tolerance = kDefaultTolerance);

/// Same rule on precomputed values; NaN entries are treated as excluded points.
MonotoneVerdict check_monotone_values(std::span<const double> t, std::span<const double> v, const Grid& grid,
                                      Direction direction, double tolerance = kDefaultTolerance);

// Comparisons of X = max over model x against Y = max over model y; each asks
// whether X is smaller than Y in the given order. Values are compared in log
// space, so `tolerance` is relative.

/// X <=st Y: F_X(t) >= F_Y(t) at every grid point.
OrderVerdict check_st(const ScaleModel& x, const ScaleModel& y, const Grid& grid,
                      double tolerance = kDefaultTolerance);
/// X <=rh Y: r_X(t) <= r_Y(t) at every grid point, cross-checked by F_Y/F_X increasing.
OrderVerdict check_rh(const ScaleModel& x, const ScaleModel& y, const Grid& grid,
                      double tolerance = kDefaultTolerance);
/// t -> r_Y(t)/r_X(t) increasing.
MonotoneVerdict check_rh_ratio_increasing(const ScaleModel& x, const ScaleModel& y, const Grid& grid,
                                          double tolerance = kDefaultTolerance);
/// X <=lr Y: f_Y/f_X increasing (direct), together with the lr_from_rh composition.
OrderVerdict check_lr(const ScaleModel& x, const ScaleModel& y, const Grid& grid,
                      double tolerance = kDefaultTolerance);

/// rh order plus an increasing rh ratio give the lr order. One-directional:
/// a missing hypothesis yields inconclusive, never fails. Throws UsageError if
/// the verdicts were computed on different grids.
OrderVerdict lr_from_rh(const OrderVerdict& rh, const MonotoneVerdict& ratio);

/// t -> r_F(t)/r_G(t) increasing.
MonotoneVerdict check_rf_over_rg_increasing(const Baseline& f, const Baseline& g, const Grid& grid,
                                            double tolerance = kDefaultTolerance);

/// All order checks for one pair of models, sharing a single evaluation of each model.
struct Comparison {
  OrderVerdict st;
  OrderVerdict rh;
  OrderVerdict lr;
  MonotoneVerdict rh_ratio;
};

Comparison compare_orders(const ScaleModel& x, const ScaleModel& y, const Grid& grid,
                          double tolerance = kDefaultTolerance);

}  // namespace maxorder
