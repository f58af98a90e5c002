#include "maxorder/order_checks.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>

#include "maxorder/errors.hpp"
#include "maxorder/parse.hpp"

namespace maxorder {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kLogDensityFloor = std::log(1e-290);

std::string at_t(double t) {
  std::ostringstream os;
  os.precision(17);
  os << t;
  return os.str();
}

bool violates(double v1, double v2, Direction direction, double tolerance) {
  const double scale = std::max({std::fabs(v1), std::fabs(v2), 1.0});
  const double allowed = tolerance * scale;
  return direction == Direction::increasing ? v2 < v1 - allowed : v2 > v1 + allowed;
}

struct Trace {
  std::vector<double> t;
  std::vector<MaxPoint> points;
  std::string error;  // non-empty when evaluation threw
};

Trace trace(const ScaleModel& model, const std::vector<double>& t) {
  Trace tr;
  tr.t = t;
  tr.points.reserve(t.size());
  try {
    for (double ti : t) tr.points.push_back(evaluate_max(model, ti));
  } catch (const std::exception& e) {
    tr.error = e.what();
  }
  return tr;
}

OrderVerdict inconclusive_order(Order order, const Grid& grid, double tol, std::string reason) {
  OrderVerdict v;
  v.order = order;
  v.outcome = Outcome::inconclusive;
  v.grid = grid;
  v.tolerance = tol;
  v.reason = std::move(reason);
  return v;
}

MonotoneVerdict inconclusive_monotone(const Grid& grid, Direction d, double tol, std::string quantity,
                                      std::string reason) {
  MonotoneVerdict v;
  v.outcome = Outcome::inconclusive;
  v.direction = d;
  v.grid = grid;
  v.tolerance = tol;
  v.quantity = std::move(quantity);
  v.reason = std::move(reason);
  return v;
}

// Pointwise check: margin(i) >= -tol everywhere. `vx`/`vy` are the reported values.
OrderVerdict pointwise(Order order, const Grid& grid, double tol, const std::vector<double>& t,
                       const std::vector<double>& margin, const std::vector<double>& vx,
                       const std::vector<double>& vy) {
  OrderVerdict v;
  v.order = order;
  v.grid = grid;
  v.tolerance = tol;
  v.extremal_gap = std::numeric_limits<double>::infinity();
  v.largest_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(margin[i])) {
      if (std::isnan(margin[i])) {
        return inconclusive_order(order, grid, tol, "undefined comparison at t=" + at_t(t[i]));
      }
      if (margin[i] > 0) continue;  // +inf margin: trivially satisfied
      return inconclusive_order(order, grid, tol, "non-finite margin at t=" + at_t(t[i]));
    }
    if (margin[i] < v.extremal_gap) {
      v.extremal_gap = margin[i];
      v.extremal_gap_t = t[i];
    }
    if (margin[i] > v.largest_gap) {
      v.largest_gap = margin[i];
      v.largest_gap_t = t[i];
    }
    if (margin[i] < -tol && v.outcome == Outcome::holds) {
      v.outcome = Outcome::fails;
      v.witness = Witness{t[i], t[i], vx[i], vy[i]};
    }
  }
  if (!std::isfinite(v.extremal_gap)) v.extremal_gap = 0.0;
  if (!std::isfinite(v.largest_gap)) v.largest_gap = 0.0;
  return v;
}

struct PairTraces {
  Trace x;
  Trace y;
};

OrderVerdict st_from(const PairTraces& p, const Grid& grid, double tol) {
  if (!p.x.error.empty() || !p.y.error.empty()) {
    return inconclusive_order(Order::st, grid, tol, "evaluation error: " + p.x.error + p.y.error);
  }
  const std::size_t n = p.x.t.size();
  std::vector<double> margin(n), vx(n), vy(n);
  for (std::size_t i = 0; i < n; ++i) {
    margin[i] = p.x.points[i].log_cdf - p.y.points[i].log_cdf;
    vx[i] = std::exp(p.x.points[i].log_cdf);
    vy[i] = std::exp(p.y.points[i].log_cdf);
  }
  return pointwise(Order::st, grid, tol, p.x.t, margin, vx, vy);
}

MonotoneVerdict ratio_from(const PairTraces& p, const Grid& grid, double tol) {
  const std::string quantity = "log(r_Y/r_X)";
  if (!p.x.error.empty() || !p.y.error.empty()) {
    return inconclusive_monotone(grid, Direction::increasing, tol, quantity,
                                 "evaluation error: " + p.x.error + p.y.error);
  }
  std::vector<double> v(p.x.t.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = p.y.points[i].log_reverse_hazard - p.x.points[i].log_reverse_hazard;
  }
  auto out = check_monotone_values(p.x.t, v, grid, Direction::increasing, tol);
  out.quantity = quantity;
  return out;
}

OrderVerdict rh_from(const PairTraces& p, const Grid& grid, double tol) {
  if (!p.x.error.empty() || !p.y.error.empty()) {
    return inconclusive_order(Order::rh, grid, tol, "evaluation error: " + p.x.error + p.y.error);
  }
  const std::size_t n = p.x.t.size();
  std::vector<double> margin(n), vx(n), vy(n), cdf_ratio(n);
  for (std::size_t i = 0; i < n; ++i) {
    margin[i] = p.y.points[i].log_reverse_hazard - p.x.points[i].log_reverse_hazard;
    vx[i] = std::exp(p.x.points[i].log_reverse_hazard);
    vy[i] = std::exp(p.y.points[i].log_reverse_hazard);
    cdf_ratio[i] = p.y.points[i].log_cdf - p.x.points[i].log_cdf;
  }
  auto v = pointwise(Order::rh, grid, tol, p.x.t, margin, vx, vy);
  auto cross = check_monotone_values(p.x.t, cdf_ratio, grid, Direction::increasing, tol);
  cross.quantity = "log(F_Y/F_X)";
  if (v.outcome != Outcome::inconclusive && cross.outcome != Outcome::inconclusive &&
      v.holds() != cross.holds()) {
    v.notes.push_back(std::string("pointwise reverse-hazard comparison ") + (v.holds() ? "holds" : "fails") +
                      " but the CDF-ratio cross-check " + (cross.holds() ? "holds" : "fails"));
  }
  v.cross_check = std::move(cross);
  return v;
}

OrderVerdict lr_from(const PairTraces& p, const Grid& grid, double tol, const OrderVerdict& rh,
                     const MonotoneVerdict& ratio) {
  const std::string quantity = "log(f_Y/f_X)";
  MonotoneVerdict direct;
  if (!p.x.error.empty() || !p.y.error.empty()) {
    direct = inconclusive_monotone(grid, Direction::increasing, tol, quantity,
                                   "evaluation error: " + p.x.error + p.y.error);
  } else {
    const std::size_t n = p.x.t.size();
    std::vector<double> v(n);
    std::size_t excluded = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double lx = p.x.points[i].log_pdf();
      const double ly = p.y.points[i].log_pdf();
      if (lx < kLogDensityFloor && ly < kLogDensityFloor) {
        v[i] = kNaN;
        ++excluded;
      } else {
        v[i] = ly - lx;
      }
    }
    direct = check_monotone_values(p.x.t, v, grid, Direction::increasing, tol);
    direct.quantity = quantity;
    direct.excluded_points = excluded;
  }

  OrderVerdict out = lr_from_rh(rh, ratio);
  out.composed = out.outcome;
  out.rh_ratio = ratio;
  if (direct.excluded_points > 0) {
    out.notes.push_back("truncated grid: " + std::to_string(direct.excluded_points) +
                        " points where both densities are below 1e-290 were excluded from the direct check");
  }
  // Overall: a refuted density ratio is a failure; otherwise either route may certify.
  if (direct.outcome == Outcome::fails) {
    out.outcome = Outcome::fails;
    out.witness = direct.witness;
    if (*out.composed == Outcome::holds) {
      out.notes.push_back("direct density-ratio check fails although the rh composition holds");
    }
  } else if (direct.outcome == Outcome::holds || *out.composed == Outcome::holds) {
    out.outcome = Outcome::holds;
    out.witness.reset();
    out.reason.clear();
  } else {
    out.outcome = Outcome::inconclusive;
    if (out.reason.empty()) out.reason = direct.reason;
  }
  out.cross_check = std::move(direct);
  return out;
}

PairTraces traces(const ScaleModel& x, const ScaleModel& y, const Grid& grid) {
  grid.validate();
  const auto t = grid.abscissae();
  return {trace(x, t), trace(y, t)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Grid

void Grid::validate() const {
  if (!(t_min > 0.0) || !std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
    throw UsageError("grid needs 0 < t_min < t_max (got t_min=" + at_t(t_min) + ", t_max=" + at_t(t_max) + ")");
  }
  if (points < 2) throw UsageError("grid needs at least 2 points");
}

std::vector<double> Grid::abscissae() const {
  validate();
  std::vector<double> t(points);
  const double last = static_cast<double>(points - 1);
  if (spacing == Spacing::log) {
    const double a = std::log(t_min);
    const double b = std::log(t_max);
    for (std::size_t i = 0; i < points; ++i) t[i] = std::exp(a + (b - a) * (static_cast<double>(i) / last));
  } else {
    for (std::size_t i = 0; i < points; ++i) t[i] = t_min + (t_max - t_min) * (static_cast<double>(i) / last);
  }
  t.front() = t_min;
  t.back() = t_max;
  return t;
}

Grid Grid::scaled(double factor) const {
  Grid g = *this;
  g.t_min *= factor;
  g.t_max *= factor;
  return g;
}

Grid Grid::default_for(const ScaleModel& x, const ScaleModel& y) {
  Grid g;
  g.t_min = 1e-3 / std::max(x.lambda_max(), y.lambda_max());
  g.t_max = 50.0 / std::min(x.lambda_min(), y.lambda_min());
  return g;
}

Grid Grid::default_for(const ScaleModel& x) { return default_for(x, x); }

Grid Grid::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::vector<std::size_t> offsets;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    parts.push_back(text.substr(start, end - start));
    offsets.push_back(start);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw UsageError("grid must be 'tmin,tmax,points,log|lin'");
  Grid g;
  g.t_min = parse::real(parts[0], offsets[0]);
  g.t_max = parse::real(parts[1], offsets[1]);
  const double pts = parse::real(parts[2], offsets[2]);
  if (pts < 2 || pts != std::floor(pts) || pts > 1e8) {
    throw UsageError("grid points must be an integer >= 2 at position " + std::to_string(offsets[2] + 1));
  }
  g.points = static_cast<std::size_t>(pts);
  if (parts[3] == "log") {
    g.spacing = Spacing::log;
  } else if (parts[3] == "lin" || parts[3] == "linear") {
    g.spacing = Spacing::linear;
  } else {
    throw UsageError("grid spacing must be 'log' or 'lin' at position " + std::to_string(offsets[3] + 1));
  }
  g.validate();
  return g;
}

Grid baseline_grid(const Grid& model_grid, double lambda_min, double lambda_max) {
  Grid g = model_grid;
  g.t_min = model_grid.t_min * lambda_min;
  g.t_max = model_grid.t_max * lambda_max;
  return g;
}

std::string_view to_string(Spacing s) { return s == Spacing::log ? "log" : "lin"; }

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds:
      return "holds";
    case Outcome::fails:
      return "fails";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string_view to_string(Direction d) { return d == Direction::increasing ? "increasing" : "decreasing"; }

std::string_view to_string(Order o) {
  switch (o) {
    case Order::st:
      return "st";
    case Order::rh:
      return "rh";
    case Order::lr:
      return "lr";
  }
  return "st";
}

// ---------------------------------------------------------------------------
// Monotonicity

MonotoneVerdict check_monotone_values(std::span<const double> t, std::span<const double> v, const Grid& grid,
                                      Direction direction, double tolerance) {
  MonotoneVerdict out;
  out.direction = direction;
  out.tolerance = tolerance;
  out.grid = grid;
  if (t.size() != v.size()) throw UsageError("check_monotone_values: size mismatch");

  std::optional<std::size_t> prev;
  std::size_t included = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::isnan(v[i])) {
      ++out.excluded_points;
      continue;
    }
    if (std::isinf(v[i])) {
      return inconclusive_monotone(grid, direction, tolerance, out.quantity, "non-finite value at t=" + at_t(t[i]));
    }
    ++included;
    if (prev && out.outcome == Outcome::holds && violates(v[*prev], v[i], direction, tolerance)) {
      out.outcome = Outcome::fails;
      out.witness = Witness{t[*prev], t[i], v[*prev], v[i]};
    }
    prev = i;
  }
  if (included < 2) {
    auto r = inconclusive_monotone(grid, direction, tolerance, out.quantity,
                                   "fewer than two evaluable grid points");
    r.excluded_points = out.excluded_points;
    return r;
  }
  return out;
}

MonotoneVerdict check_monotone(const std::function<double(double)>& g, const Grid& grid, Direction direction,
                               double tolerance) {
  const auto t = grid.abscissae();
  std::vector<double> v(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    try {
      v[i] = g(t[i]);
    } catch (const std::exception& e) {
      return inconclusive_monotone(grid, direction, tolerance, "",
                                   "evaluation error at t=" + at_t(t[i]) + ": " + e.what());
    }
    if (!std::isfinite(v[i])) {
      return inconclusive_monotone(grid, direction, tolerance, "", "non-finite value at t=" + at_t(t[i]));
    }
  }
  return check_monotone_values(t, v, grid, direction, tolerance);
}

// ---------------------------------------------------------------------------
// Orders

OrderVerdict check_st(const ScaleModel& x, const ScaleModel& y, const Grid& grid, double tolerance) {
  return st_from(traces(x, y, grid), grid, tolerance);
}

OrderVerdict check_rh(const ScaleModel& x, const ScaleModel& y, const Grid& grid, double tolerance) {
  return rh_from(traces(x, y, grid), grid, tolerance);
}

MonotoneVerdict check_rh_ratio_increasing(const ScaleModel& x, const ScaleModel& y, const Grid& grid,
                                          double tolerance) {
  return ratio_from(traces(x, y, grid), grid, tolerance);
}

OrderVerdict check_lr(const ScaleModel& x, const ScaleModel& y, const Grid& grid, double tolerance) {
  return compare_orders(x, y, grid, tolerance).lr;
}

OrderVerdict lr_from_rh(const OrderVerdict& rh, const MonotoneVerdict& ratio) {
  if (rh.order != Order::rh) throw UsageError("lr_from_rh: first argument must be an rh verdict");
  if (!(rh.grid == ratio.grid)) throw UsageError("lr_from_rh: verdicts were computed on different grids");
  OrderVerdict out;
  out.order = Order::lr;
  out.grid = rh.grid;
  out.tolerance = std::max(rh.tolerance, ratio.tolerance);
  if (rh.holds() && ratio.holds()) {
    out.outcome = Outcome::holds;
    return out;
  }
  out.outcome = Outcome::inconclusive;
  if (!rh.holds()) {
    out.reason = std::string("rh hypothesis ") + std::string(to_string(rh.outcome));
    out.witness = rh.witness;
  } else {
    out.reason = std::string("rh-ratio hypothesis ") + std::string(to_string(ratio.outcome));
    out.witness = ratio.witness;
  }
  return out;
}

MonotoneVerdict check_rf_over_rg_increasing(const Baseline& f, const Baseline& g, const Grid& grid,
                                            double tolerance) {
  auto out = check_monotone(
      [&](double t) { return f.log_reverse_hazard(t) - g.log_reverse_hazard(t); }, grid, Direction::increasing,
      tolerance);
  out.quantity = "log(r_F/r_G)";
  return out;
}

Comparison compare_orders(const ScaleModel& x, const ScaleModel& y, const Grid& grid, double tolerance) {
  const auto p = traces(x, y, grid);
  Comparison c;
  c.st = st_from(p, grid, tolerance);
  c.rh = rh_from(p, grid, tolerance);
  c.rh_ratio = ratio_from(p, grid, tolerance);
  c.lr = lr_from(p, grid, tolerance, c.rh, c.rh_ratio);
  return c;
}

}  // namespace maxorder
