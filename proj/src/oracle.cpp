#include "maxorder/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <ostream>

#include <boost/math/tools/roots.hpp>

#include "maxorder/errors.hpp"
#include "maxorder/random.hpp"

namespace maxorder {
namespace {

constexpr double kCdfTolerance = 1e-10;
const double kLogTMin = std::log(1e-300);
const double kLogTMax = std::log(1e300);

double ecdf(const std::vector<double>& sorted, double t) {
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), t);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

}  // namespace

double quantile(const Baseline& baseline, double u) {
  if (!(u > 0.0 && u < 1.0)) throw DomainError("quantile: u must lie in (0, 1)");
  // Work in y = log t; F(exp(y)) is increasing in y.
  auto excess = [&](double y) { return baseline.cdf(std::exp(y)) - u; };

  double lo = std::log(baseline.t_min());
  while (excess(lo) > 0.0) {
    if (lo <= kLogTMin) return std::exp(lo);
    lo = std::max(lo - 10.0, kLogTMin);
  }
  double hi = std::max(lo, 0.0);
  while (excess(hi) < 0.0) {
    if (hi >= kLogTMax) return std::exp(hi);
    hi += std::log(2.0);  // doubling in t
  }

  std::uintmax_t max_iter = 200;
  const auto tol = [&](double a, double b) {
    return std::fabs(b - a) <= 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(a)) ||
           std::fabs(excess(0.5 * (a + b))) <= kCdfTolerance * 0.01;
  };
  const auto [a, b] = boost::math::tools::toms748_solve(excess, lo, hi, tol, max_iter);
  const double ea = std::fabs(excess(a));
  const double eb = std::fabs(excess(b));
  const double em = std::fabs(excess(0.5 * (a + b)));
  if (em <= ea && em <= eb) return std::exp(0.5 * (a + b));
  return std::exp(ea <= eb ? a : b);
}

SampleBatch sample_max(const ScaleModel& model, std::size_t count, std::uint64_t seed, std::uint64_t stream) {
  if (count < 1) throw UsageError("sample_max: count must be >= 1");
  SampleBatch batch;
  batch.seed = seed;
  batch.model = model.describe();
  batch.values.reserve(count);
  Rng rng(seed, stream);
  for (std::size_t k = 0; k < count; ++k) {
    double best = 0.0;
    for (const auto& c : model.components()) {
      best = std::max(best, quantile(*c.baseline, rng.uniform()) / c.lambda);
    }
    batch.values.push_back(best);
  }
  return batch;
}

SampleBatch sample_max_streams(const ScaleModel& model, std::size_t count, std::uint64_t seed, std::size_t streams) {
  if (streams < 1) throw UsageError("sample_max_streams: streams must be >= 1");
  if (count < streams) throw UsageError("sample_max_streams: need at least one draw per stream");
  std::vector<std::future<SampleBatch>> parts;
  parts.reserve(streams);
  for (std::size_t s = 0; s < streams; ++s) {
    const std::size_t n = count / streams + (s < count % streams ? 1 : 0);
    parts.push_back(std::async(std::launch::async, [&model, n, seed, s] { return sample_max(model, n, seed, s); }));
  }
  SampleBatch merged;
  merged.seed = seed;
  merged.model = model.describe();
  merged.values.reserve(count);
  for (auto& f : parts) {
    const auto part = f.get();
    merged.values.insert(merged.values.end(), part.values.begin(), part.values.end());
  }
  return merged;
}

double sup_distance(const SampleBatch& batch, const ScaleModel& model) {
  std::vector<double> sorted = batch.values;
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = max_cdf(model, sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

void write_csv(std::ostream& os, const SampleBatch& batch) {
  os << "# model=" << batch.model << " seed=" << batch.seed << '\n';
  os << "lifetime\n";
  const auto old = os.precision(17);
  for (double v : batch.values) os << v << '\n';
  os.precision(old);
}

McStReport mc_check_st(const ScaleModel& x, const ScaleModel& y, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw UsageError("mc_check_st: count must be >= 1");
  auto sx = sample_max(x, count, seed, 0).values;
  auto sy = sample_max(y, count, seed, 1).values;
  std::sort(sx.begin(), sx.end());
  std::sort(sy.begin(), sy.end());

  McStReport rep;
  rep.count_x = sx.size();
  rep.count_y = sy.size();
  rep.seed = seed;
  rep.max_violation = -std::numeric_limits<double>::infinity();
  const double inv_n = 1.0 / static_cast<double>(sx.size()) + 1.0 / static_cast<double>(sy.size());
  for (std::size_t k = 0; k < rep.levels; ++k) {
    const double p = (static_cast<double>(k) + 0.5) / static_cast<double>(rep.levels);
    const auto idx = std::min(sy.size() - 1, static_cast<std::size_t>(p * static_cast<double>(sy.size())));
    const double t = sy[idx];
    const double violation = ecdf(sy, t) - ecdf(sx, t);
    const double band = 4.0 * std::sqrt(p * (1.0 - p) * inv_n);
    if (violation > rep.max_violation) {
      rep.max_violation = violation;
      rep.violation_t = t;
      rep.band = band;
    }
    if (violation > band) rep.violated = true;
  }
  return rep;
}

}  // namespace maxorder
