#include "maxorder/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maxorder/errors.hpp"
#include "maxorder/random.hpp"

namespace maxorder {
namespace {

std::vector<double> increasing_prefix_sums(std::span<const double> v) {
  std::vector<double> sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> sums(sorted.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    acc += sorted[i];
    sums[i] = acc;
  }
  return sums;
}

void check_entries(std::span<const double> v, const char* name) {
  for (double e : v) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw DomainError(std::string("majorization: entries of ") + name + " must be positive and finite");
    }
  }
}

}  // namespace

MajorizationRelation compare_majorization(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw UsageError("majorization: vectors have different lengths (" + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()) + ")");
  }
  if (x.empty()) throw UsageError("majorization: vectors must be nonempty");
  check_entries(x, "x");
  check_entries(y, "y");

  MajorizationRelation rel;
  rel.prefix_sums_x = increasing_prefix_sums(x);
  rel.prefix_sums_y = increasing_prefix_sums(y);
  rel.total_x = rel.prefix_sums_x.back();
  rel.total_y = rel.prefix_sums_y.back();

  const double max_coord = std::max(*std::max_element(x.begin(), x.end()), *std::max_element(y.begin(), y.end()));
  const auto n = static_cast<double>(x.size());
  rel.tolerance = 1e-12 * n * max_coord;

  const std::size_t count = x.size();
  bool leading_ok = true;
  for (std::size_t j = 0; j + 1 < count; ++j) {
    if (rel.prefix_sums_x[j] < rel.prefix_sums_y[j] - rel.tolerance) leading_ok = false;
  }
  const double total_tol = std::max(rel.tolerance, 1e-12 * std::max(std::fabs(rel.total_x), 1.0));
  const bool totals_equal = std::fabs(rel.total_x - rel.total_y) <= total_tol;
  const bool total_ge = rel.total_x >= rel.total_y - rel.tolerance;

  rel.weakly_supermajorized = leading_ok && (total_ge || totals_equal);
  rel.majorized = leading_ok && totals_equal;
  return rel;
}

bool is_majorized_by(std::span<const double> x, std::span<const double> y) {
  return compare_majorization(x, y).majorized;
}

bool is_weakly_supermajorized_by(std::span<const double> x, std::span<const double> y) {
  return compare_majorization(x, y).weakly_supermajorized;
}

std::vector<double> robin_hood_transfer(std::span<const double> v, std::size_t from, std::size_t to, double delta) {
  if (from >= v.size() || to >= v.size()) throw UsageError("robin_hood_transfer: index out of range");
  std::vector<double> out(v.begin(), v.end());
  out[from] -= delta;
  out[to] += delta;
  return out;
}

SchurProbeResult schur_convexity_probe(const std::function<double(std::span<const double>)>& phi, std::size_t n,
                                       std::size_t trials, std::uint64_t seed, const SchurProbeOptions& options) {
  if (trials < 1) throw UsageError("schur_convexity_probe: trials must be >= 1");
  if (n < 2) throw UsageError("schur_convexity_probe: dimension must be >= 2");
  Rng rng(seed);
  SchurProbeResult result;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<double> y(n);
    for (auto& e : y) e = rng.uniform(options.coordinate_min, options.coordinate_max);
    auto i = static_cast<std::size_t>(rng.integer(0, n - 1));
    auto j = static_cast<std::size_t>(rng.integer(0, n - 2));
    if (j >= i) ++j;
    if (y[i] > y[j]) std::swap(i, j);  // y[j] is the larger coordinate
    const double delta = rng.uniform() * (y[j] - y[i]) / 2.0;
    const auto x = robin_hood_transfer(y, j, i, delta);

    ++result.trials_run;
    const double px = phi(x);
    const double py = phi(y);
    if (!(px <= py + options.tolerance)) {
      result.consistent = false;
      result.witness = SchurWitness{x, y, px, py};
      break;
    }
  }
  return result;
}

}  // namespace maxorder
