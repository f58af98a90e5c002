#include "maxorder/scale_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "maxorder/errors.hpp"
#include "maxorder/parse.hpp"

namespace maxorder {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogCdfFloor = std::log(1e-300);

void validate(const std::vector<Component>& components) {
  if (components.empty()) throw UsageError("a scale model needs at least one component");
  for (const auto& c : components) {
    if (!c.baseline) throw UsageError("scale model component without a baseline");
    if (!(c.lambda > 0.0) || !std::isfinite(c.lambda)) {
      std::ostringstream os;
      os << "scale parameters must be positive and finite (got " << c.lambda << ")";
      throw DomainError(os.str());
    }
  }
}

std::vector<Component> single_baseline(std::shared_ptr<const Baseline> baseline,
                                       const std::vector<double>& lambdas) {
  std::vector<Component> out;
  out.reserve(lambdas.size());
  for (double l : lambdas) out.push_back({baseline, l});
  return out;
}

double sorted_sum(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  return std::accumulate(v.begin(), v.end(), 0.0);
}

void require_positive(double t, const char* what) {
  if (!(t > 0.0)) throw DomainError(std::string(what) + ": t must be positive");
}

}  // namespace

double log_sum_exp(std::span<const double> values) {
  std::vector<double> v(values.begin(), values.end());
  if (v.empty()) return -kInf;
  std::sort(v.begin(), v.end());
  const double top = v.back();
  if (top == -kInf) return -kInf;
  if (top == kInf) return kInf;
  double acc = 0.0;
  for (double x : v) acc += std::exp(x - top);
  return top + std::log(acc);
}

ScaleModel::ScaleModel(std::shared_ptr<const Baseline> baseline, std::vector<double> lambdas)
    : components_(single_baseline(std::move(baseline), lambdas)) {
  validate(components_);
}

ScaleModel::ScaleModel(std::vector<Component> components) : components_(std::move(components)) {
  validate(components_);
}

std::vector<double> ScaleModel::lambdas() const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.lambda);
  return out;
}

double ScaleModel::lambda_min() const {
  return std::min_element(components_.begin(), components_.end(),
                          [](const auto& a, const auto& b) { return a.lambda < b.lambda; })
      ->lambda;
}

double ScaleModel::lambda_max() const {
  return std::max_element(components_.begin(), components_.end(),
                          [](const auto& a, const auto& b) { return a.lambda < b.lambda; })
      ->lambda;
}

std::shared_ptr<const Baseline> ScaleModel::common_baseline() const {
  const auto& first = components_.front().baseline;
  for (const auto& c : components_) {
    if (c.baseline != first && c.baseline->describe() != first->describe()) return nullptr;
  }
  return first;
}

std::string ScaleModel::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "lambda=";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) os << ',';
    os << components_[i].lambda;
  }
  if (const auto b = common_baseline()) {
    os << " baseline=" << b->describe();
  } else {
    os << " baselines=";
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (i) os << ';';
      os << components_[i].baseline->describe();
    }
  }
  return os.str();
}

ScaleModel expand(const OutlierModel& m) {
  if (m.p < 1 || m.q < 1) throw UsageError("outlier model needs p >= 1 and q >= 1");
  std::vector<double> lambdas(m.p, m.lambda1);
  lambdas.insert(lambdas.end(), m.q, m.lambda);
  return ScaleModel(m.baseline, std::move(lambdas));
}

ScaleModel expand(const TwoBaselineModel& m) {
  if (m.p < 1 || m.q < 1) throw UsageError("two-baseline model needs p >= 1 and q >= 1");
  std::vector<Component> comps(m.p, Component{m.baseline_f, m.lambda1});
  comps.insert(comps.end(), m.q, Component{m.baseline_g, m.lambda});
  return ScaleModel(std::move(comps));
}

OutlierModel parse_outlier(std::string_view spec, std::shared_ptr<const Baseline> baseline) {
  OutlierModel m{std::move(baseline), 0, 0.0, 0, 0.0};
  bool seen[4] = {false, false, false, false};
  for (const auto& kv : parse::key_values(spec)) {
    const double v = parse::real(kv.value, kv.value_offset);
    auto as_count = [&]() -> std::size_t {
      if (v < 1.0 || v != std::floor(v)) {
        throw UsageError("'" + kv.key + "' must be a positive integer at position " +
                         std::to_string(kv.value_offset + 1));
      }
      return static_cast<std::size_t>(v);
    };
    if (kv.key == "p") {
      m.p = as_count();
      seen[0] = true;
    } else if (kv.key == "lambda1") {
      m.lambda1 = v;
      seen[1] = true;
    } else if (kv.key == "q") {
      m.q = as_count();
      seen[2] = true;
    } else if (kv.key == "lambda") {
      m.lambda = v;
      seen[3] = true;
    } else {
      throw UsageError("unknown outlier key '" + kv.key + "' at position " +
                       std::to_string(kv.value_offset - kv.key.size()));
    }
  }
  if (!(seen[0] && seen[1] && seen[2] && seen[3])) {
    throw UsageError("outlier spec '" + std::string(spec) + "' needs p, lambda1, q and lambda");
  }
  for (double v : {m.lambda1, m.lambda}) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("outlier scale parameters must be positive and finite");
  }
  return m;
}

MaxPoint evaluate_max(const ScaleModel& model, double t) {
  require_positive(t, "evaluate_max");
  std::vector<double> log_cdfs;
  std::vector<double> log_rh_terms;
  log_cdfs.reserve(model.size());
  log_rh_terms.reserve(model.size());
  for (const auto& c : model.components()) {
    const auto pt = c.baseline->evaluate(c.lambda * t);
    log_cdfs.push_back(pt.log_cdf);
    log_rh_terms.push_back(std::log(c.lambda) + pt.log_reverse_hazard);
  }
  return {sorted_sum(log_cdfs), log_sum_exp(log_rh_terms)};
}

double log_max_cdf(const ScaleModel& model, double t) {
  if (!(t >= 0.0)) throw DomainError("max_cdf: t must be nonnegative");
  if (t == 0.0) return -kInf;
  std::vector<double> logs;
  logs.reserve(model.size());
  for (const auto& c : model.components()) logs.push_back(c.baseline->log_cdf(c.lambda * t));
  return sorted_sum(logs);
}

double max_cdf(const ScaleModel& model, double t) {
  if (!(t >= 0.0)) throw DomainError("max_cdf: t must be nonnegative");
  if (t == 0.0) return 0.0;
  std::vector<double> logs;
  logs.reserve(model.size());
  for (const auto& c : model.components()) {
    const double l = c.baseline->log_cdf(c.lambda * t);
    if (l < kLogCdfFloor) return 0.0;
    logs.push_back(l);
  }
  return std::exp(sorted_sum(logs));
}

double log_max_reverse_hazard(const ScaleModel& model, double t) {
  return evaluate_max(model, t).log_reverse_hazard;
}

double max_reverse_hazard(const ScaleModel& model, double t) {
  require_positive(t, "max_reverse_hazard");
  std::vector<double> terms;
  terms.reserve(model.size());
  for (const auto& c : model.components()) terms.push_back(c.lambda * c.baseline->reverse_hazard(c.lambda * t));
  return sorted_sum(terms);
}

double log_max_pdf(const ScaleModel& model, double t) { return evaluate_max(model, t).log_pdf(); }

double max_pdf(const ScaleModel& model, double t) {
  require_positive(t, "max_pdf");
  const double cdf = max_cdf(model, t);
  if (cdf == 0.0) return 0.0;
  return cdf * max_reverse_hazard(model, t);
}

double max_reverse_hazard(const OutlierModel& m, double t) {
  require_positive(t, "max_reverse_hazard");
  return static_cast<double>(m.p) * m.lambda1 * m.baseline->reverse_hazard(m.lambda1 * t) +
         static_cast<double>(m.q) * m.lambda * m.baseline->reverse_hazard(m.lambda * t);
}

double max_reverse_hazard(const TwoBaselineModel& m, double t) {
  require_positive(t, "max_reverse_hazard");
  return static_cast<double>(m.p) * m.lambda1 * m.baseline_f->reverse_hazard(m.lambda1 * t) +
         static_cast<double>(m.q) * m.lambda * m.baseline_g->reverse_hazard(m.lambda * t);
}

}  // namespace maxorder
