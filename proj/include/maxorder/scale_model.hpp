#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maxorder/baseline.hpp"

namespace maxorder {

/// One independent component X_i ~ F(lambda_i t).
struct Component {
  std::shared_ptr<const Baseline> baseline;
  double lambda;
};

/// Parallel system of independent scale-family components; its lifetime is the
/// largest order statistic X_{n:n} with CDF prod_i F_i(lambda_i t).
class ScaleModel {
 public:
  /// Single shared baseline. Throws DomainError for nonpositive scales, UsageError if empty.
  ScaleModel(std::shared_ptr<const Baseline> baseline, std::vector<double> lambdas);
  explicit ScaleModel(std::vector<Component> components);

  std::size_t size() const noexcept { return components_.size(); }
  const std::vector<Component>& components() const noexcept { return components_; }
  std::vector<double> lambdas() const;
  double lambda_min() const;
  double lambda_max() const;
  /// The baseline when every component shares the same one, else nullptr.
  std::shared_ptr<const Baseline> common_baseline() const;
  std::string describe() const;

 private:
  std::vector<Component> components_;
};

/// p copies of F(lambda1 t) followed by q copies of F(lambda t).
struct OutlierModel {
  std::shared_ptr<const Baseline> baseline;
  std::size_t p;
  double lambda1;
  std::size_t q;
  double lambda;
};

/// p copies of F(lambda1 t) followed by q copies of G(lambda t).
struct TwoBaselineModel {
  std::shared_ptr<const Baseline> baseline_f;
  std::shared_ptr<const Baseline> baseline_g;
  std::size_t p;
  double lambda1;
  std::size_t q;
  double lambda;
};

ScaleModel expand(const OutlierModel& model);
ScaleModel expand(const TwoBaselineModel& model);

/// Parses "p=2,lambda1=0.5,q=3,lambda=2".
OutlierModel parse_outlier(std::string_view spec, std::shared_ptr<const Baseline> baseline);

// Distribution of the maximum. t must be positive (nonnegative for the CDF).
// Terms are summed in sorted order, so every result is bitwise invariant under
// permutation of the components.

/// prod_i F(lambda_i t); returns 0 once any factor drops below 1e-300.
double max_cdf(const ScaleModel& model, double t);
/// sum_i lambda_i r(lambda_i t).
double max_reverse_hazard(const ScaleModel& model, double t);
/// max_cdf * max_reverse_hazard; 0 under the same underflow rule as max_cdf.
double max_pdf(const ScaleModel& model, double t);

double log_max_cdf(const ScaleModel& model, double t);
double log_max_reverse_hazard(const ScaleModel& model, double t);
double log_max_pdf(const ScaleModel& model, double t);

/// Direct block forms p lambda1 r(lambda1 t) + q lambda r(lambda t).
double max_reverse_hazard(const OutlierModel& model, double t);
double max_reverse_hazard(const TwoBaselineModel& model, double t);

/// Log-space CDF and reverse hazard of the maximum at one abscissa.
struct MaxPoint {
  double log_cdf;
  double log_reverse_hazard;
  double log_pdf() const { return log_cdf + log_reverse_hazard; }
};

MaxPoint evaluate_max(const ScaleModel& model, double t);

/// log(sum exp(v)) over values sorted ascending; -inf for an empty or all -inf input.
double log_sum_exp(std::span<const double> values);

}  // namespace maxorder
