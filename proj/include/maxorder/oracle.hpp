#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "maxorder/baseline.hpp"
#include "maxorder/scale_model.hpp"

namespace maxorder {

/// Inverse CDF: t with |F(t) - u| <= 1e-10 (or the closest double to it).
/// Throws DomainError unless 0 < u < 1.
double quantile(const Baseline& baseline, double u);

/// Draws of the parallel-system lifetime X_{n:n}.
struct SampleBatch {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::string model;
};

/// Each draw is max_i quantile(F_i, u_i) / lambda_i with independent uniforms
/// from stream `stream` of `seed`.
SampleBatch sample_max(const ScaleModel& model, std::size_t count, std::uint64_t seed, std::uint64_t stream = 0);

/// Splits `count` draws over `streams` independent streams (stream k gets
/// count/streams draws plus one for k < count % streams), generates them
/// concurrently and concatenates in stream order.
SampleBatch sample_max_streams(const ScaleModel& model, std::size_t count, std::uint64_t seed, std::size_t streams);

/// Kolmogorov-Smirnov distance sup_t |F_n(t) - F(t)| of the batch against max_cdf.
double sup_distance(const SampleBatch& batch, const ScaleModel& model);

/// Single-column CSV with a leading "# model=... seed=..." comment line.
void write_csv(std::ostream& os, const SampleBatch& batch);

struct McStReport {
  std::size_t count_x = 0;
  std::size_t count_y = 0;
  std::uint64_t seed = 0;
  std::size_t levels = 100;
  /// Largest F_Y(t) - F_X(t) over the probed abscissae (positive values oppose X <=st Y).
  double max_violation = 0.0;
  double violation_t = 0.0;
  /// Noise band at the level of the largest violation.
  double band = 0.0;
  /// True when some level exceeds its band.
  bool violated = false;
};

/// Empirical comparison of F_X >= F_Y at the Y-sample quantiles of levels
/// (k + 0.5)/100, k = 0..99. The band at level p is
/// 4 sqrt(p (1 - p) (1/n_x + 1/n_y)).
McStReport mc_check_st(const ScaleModel& x, const ScaleModel& y, std::size_t count, std::uint64_t seed);

}  // namespace maxorder
