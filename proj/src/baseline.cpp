#include "maxorder/baseline.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "maxorder/errors.hpp"
#include "maxorder/parse.hpp"
#include "maxorder/special.hpp"

namespace maxorder {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double t, const char* what) {
  if (!(t > 0.0)) {
    std::ostringstream os;
    os << what << ": argument must be positive (got " << t << ")";
    throw DomainError(os.str());
  }
}

void require_nonnegative(double t, const char* what) {
  if (!(t >= 0.0)) {
    std::ostringstream os;
    os << what << ": argument must be nonnegative (got " << t << ")";
    throw DomainError(os.str());
  }
}

std::string format_real(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct GgTerms {
  double log_t;
  double x;  // t^beta
  double log_x;
};

GgTerms gg_terms(const GeneralizedGammaParams& p, double t) {
  const double log_t = std::log(t);
  const double log_x = p.beta() * log_t;
  return {log_t, std::exp(log_x), log_x};
}

double gg_log_pdf_unchecked(const GeneralizedGammaParams& p, const GgTerms& k) {
  return std::log(p.beta()) - std::lgamma(p.gamma_shape()) + (p.alpha() - 1.0) * k.log_t - k.x;
}

BaselinePoint gg_point(const GeneralizedGammaParams& p, double t) {
  const auto k = gg_terms(p, t);
  const double log_pdf = gg_log_pdf_unchecked(p, k);
  const auto g = special::incomplete_gamma(p.gamma_shape(), k.x, k.log_x);
  // In the series branch f/F collapses to alpha / (t * sum), which stays exact as t -> 0.
  const double log_rh = g.series ? std::log(p.alpha()) - k.log_t - std::log(g.series_sum)
                                 : log_pdf - g.log_p;
  const double slope = ((p.alpha() - 1.0) - p.beta() * k.x) / t;
  return {log_pdf, g.log_p, log_rh, slope};
}

}  // namespace

GeneralizedGammaParams::GeneralizedGammaParams(double beta, double alpha) : beta_(beta), alpha_(alpha) {
  if (!(beta > 0.0) || !std::isfinite(beta) || !(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("generalized gamma shapes must be positive and finite (beta=" + format_real(beta) +
                      ", alpha=" + format_real(alpha) + ")");
  }
}

GeneralizedGammaParams make_special(SpecialFamily family, double shape) {
  switch (family) {
    case SpecialFamily::exponential:
      return {1.0, 1.0};
    case SpecialFamily::weibull:
      if (!(shape > 0.0)) throw DomainError("weibull shape must be positive");
      return {shape, shape};
    case SpecialFamily::gamma:
      if (!(shape > 0.0)) throw DomainError("gamma shape must be positive");
      return {1.0, shape};
  }
  throw DomainError("unknown special family");
}

double gg_log_pdf(const GeneralizedGammaParams& p, double t) {
  require_positive(t, "gg_pdf");
  return gg_log_pdf_unchecked(p, gg_terms(p, t));
}

double gg_pdf(const GeneralizedGammaParams& p, double t) { return std::exp(gg_log_pdf(p, t)); }

double gg_log_cdf(const GeneralizedGammaParams& p, double t) {
  require_nonnegative(t, "gg_cdf");
  if (t == 0.0) return -kInf;
  const auto k = gg_terms(p, t);
  return special::incomplete_gamma(p.gamma_shape(), k.x, k.log_x).log_p;
}

double gg_cdf(const GeneralizedGammaParams& p, double t) {
  require_nonnegative(t, "gg_cdf");
  if (t == 0.0) return 0.0;
  const auto k = gg_terms(p, t);
  const auto g = special::incomplete_gamma(p.gamma_shape(), k.x, k.log_x);
  return g.series ? std::exp(g.log_p) : -std::expm1(g.log_q);
}

double gg_log_reverse_hazard(const GeneralizedGammaParams& p, double t) {
  require_positive(t, "gg_reverse_hazard");
  return gg_point(p, t).log_reverse_hazard;
}

double gg_reverse_hazard(const GeneralizedGammaParams& p, double t) {
  return std::exp(gg_log_reverse_hazard(p, t));
}

double gg_log_density_slope(const GeneralizedGammaParams& p, double t) {
  require_positive(t, "gg_log_density_slope");
  return ((p.alpha() - 1.0) - p.beta() * std::pow(t, p.beta())) / t;
}

double gg_reverse_hazard_derivative(const GeneralizedGammaParams& p, double t) {
  require_positive(t, "gg_reverse_hazard_derivative");
  const auto pt = gg_point(p, t);
  const double r = std::exp(pt.log_reverse_hazard);
  return r * (pt.log_density_slope - r);
}

double gg_eta_closed_form(const GeneralizedGammaParams& p, double t) {
  require_positive(t, "gg_eta_closed_form");
  const double x = std::pow(t, p.beta());
  return -(p.alpha() - 1.0 - p.beta() * x - t * gg_reverse_hazard(p, t));
}

// ---------------------------------------------------------------------------
// Baseline

double Baseline::log_pdf(double t) const {
  require_positive(t, "pdf");
  return do_evaluate(t).log_pdf;
}

double Baseline::pdf(double t) const { return std::exp(log_pdf(t)); }

double Baseline::log_cdf(double t) const {
  require_nonnegative(t, "cdf");
  if (t == 0.0) return -kInf;
  return do_log_cdf(t);
}

double Baseline::cdf(double t) const {
  const double l = log_cdf(t);
  return std::exp(l);
}

double Baseline::log_reverse_hazard(double t) const {
  require_positive(t, "reverse_hazard");
  return do_evaluate(t).log_reverse_hazard;
}

double Baseline::reverse_hazard(double t) const { return std::exp(log_reverse_hazard(t)); }

double Baseline::log_density_slope(double t) const {
  require_positive(t, "log_density_slope");
  return do_evaluate(t).log_density_slope;
}

double Baseline::reverse_hazard_derivative(double t) const {
  const auto pt = evaluate(t);
  const double r = std::exp(pt.log_reverse_hazard);
  return r * (pt.log_density_slope - r);
}

BaselinePoint Baseline::evaluate(double t) const {
  require_positive(t, "evaluate");
  return do_evaluate(t);
}

// ---------------------------------------------------------------------------
// GeneralizedGamma

std::string GeneralizedGamma::describe() const {
  return "gg:beta=" + format_real(params_.beta()) + ",alpha=" + format_real(params_.alpha());
}

BaselinePoint GeneralizedGamma::do_evaluate(double t) const { return gg_point(params_, t); }

double GeneralizedGamma::do_log_cdf(double t) const { return gg_log_cdf(params_, t); }

std::shared_ptr<const Baseline> make_baseline(const GeneralizedGammaParams& params) {
  return std::make_shared<const GeneralizedGamma>(params);
}

std::shared_ptr<const Baseline> parse_baseline(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const std::size_t rest_offset = colon == std::string_view::npos ? spec.size() : colon + 1;

  const auto fields = parse::key_values(rest, rest_offset);
  auto lookup = [&](std::string_view key) -> double {
    for (const auto& kv : fields) {
      if (kv.key == key) return parse::real(kv.value, kv.value_offset);
    }
    throw UsageError("baseline '" + std::string(spec) + "' is missing '" + std::string(key) + "'");
  };
  auto expect_keys = [&](std::initializer_list<std::string_view> allowed) {
    for (const auto& kv : fields) {
      bool ok = false;
      for (auto a : allowed) ok = ok || kv.key == a;
      if (!ok) {
        throw UsageError("unknown baseline key '" + kv.key + "' at position " +
                         std::to_string(kv.value_offset - kv.key.size()));
      }
    }
  };

  if (family == "exp" || family == "exponential") {
    expect_keys({});
    return make_baseline(make_special(SpecialFamily::exponential));
  }
  if (family == "weibull") {
    expect_keys({"shape"});
    return make_baseline(make_special(SpecialFamily::weibull, lookup("shape")));
  }
  if (family == "gamma") {
    expect_keys({"shape"});
    return make_baseline(make_special(SpecialFamily::gamma, lookup("shape")));
  }
  if (family == "gg") {
    expect_keys({"beta", "alpha"});
    return make_baseline(GeneralizedGammaParams(lookup("beta"), lookup("alpha")));
  }
  throw UsageError("unknown baseline family '" + std::string(family) +
                   "' at position 1 (expected gg, exp, weibull or gamma)");
}

// ---------------------------------------------------------------------------
// ConditionFunctions

ConditionFunctions::ConditionFunctions(std::shared_ptr<const Baseline> baseline)
    : baseline_(std::move(baseline)) {
  if (!baseline_) throw UsageError("condition functions need a baseline");
}

double ConditionFunctions::psi(double t) const { return t * baseline_->reverse_hazard(t); }

double ConditionFunctions::eta(double t) const {
  const auto pt = baseline_->evaluate(t);
  return t * (std::exp(pt.log_reverse_hazard) - pt.log_density_slope);
}

double ConditionFunctions::chi(double t) const {
  const auto pt = baseline_->evaluate(t);
  const double psi = t * std::exp(pt.log_reverse_hazard);
  return psi * (t * pt.log_density_slope - psi);
}

ConditionFunctions condition_functions(std::shared_ptr<const Baseline> baseline) {
  return ConditionFunctions(std::move(baseline));
}

}  // namespace maxorder
