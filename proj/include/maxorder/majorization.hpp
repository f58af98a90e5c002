#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace maxorder {

/// Comparison of x against y under majorization (x <=m y) and weak
/// supermajorization (x <=w y). Prefix sums are over the increasing
/// arrangements, so x <=w y means every sum of the j smallest entries of x is
/// at least the corresponding sum for y.
struct MajorizationRelation {
  bool majorized = false;             ///< x <=m y
  bool weakly_supermajorized = false; ///< x <=w y
  std::vector<double> prefix_sums_x;
  std::vector<double> prefix_sums_y;
  double total_x = 0.0;
  double total_y = 0.0;
  double tolerance = 0.0;
};

/// Throws UsageError on length mismatch or empty input, DomainError on
/// nonpositive or non-finite entries.
MajorizationRelation compare_majorization(std::span<const double> x, std::span<const double> y);

/// x <=m y: y majorizes x.
bool is_majorized_by(std::span<const double> x, std::span<const double> y);
/// x <=w y: y weakly supermajorizes x.
bool is_weakly_supermajorized_by(std::span<const double> x, std::span<const double> y);

/// Robin-Hood transfer: moves `delta` from coordinate `from` (the larger) to
/// `to` (the smaller). With 0 < delta <= (v[from] - v[to]) / 2 the result is
/// majorized by the input.
std::vector<double> robin_hood_transfer(std::span<const double> v, std::size_t from, std::size_t to,
                                        double delta);

struct SchurWitness {
  std::vector<double> x;  ///< majorized by y
  std::vector<double> y;
  double phi_x;
  double phi_y;
};

struct SchurProbeResult {
  bool consistent = true;
  std::size_t trials_run = 0;
  std::optional<SchurWitness> witness;
};

struct SchurProbeOptions {
  double tolerance = 1e-10;
  double coordinate_min = 0.1;
  double coordinate_max = 5.0;
};

/// Draws random positive vectors y, forms x <=m y by one Robin-Hood transfer,
/// and checks phi(x) <= phi(y) + tolerance. Deterministic given `seed`; stops
/// at the first violating pair.
SchurProbeResult schur_convexity_probe(const std::function<double(std::span<const double>)>& phi,
                                       std::size_t n, std::size_t trials, std::uint64_t seed,
                                       const SchurProbeOptions& options = {});

}  // namespace maxorder
