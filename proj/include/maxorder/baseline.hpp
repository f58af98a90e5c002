#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace maxorder {

/// Shape parameters of the generalized gamma family GG(beta, alpha), with density
///
///     f(t) = beta / Gamma(alpha/beta) * t^(alpha-1) * exp(-t^beta),   t > 0.
///
/// (1,1) is the unit exponential, (1,a) is gamma(a) and (a,a) is Weibull(a).
class GeneralizedGammaParams {
 public:
  /// Throws DomainError unless both shapes are positive and finite.
  GeneralizedGammaParams(double beta, double alpha);

  double beta() const noexcept { return beta_; }
  double alpha() const noexcept { return alpha_; }
  /// alpha / beta, the shape of the underlying gamma variable t^beta.
  double gamma_shape() const noexcept { return alpha_ / beta_; }

  bool operator==(const GeneralizedGammaParams&) const = default;

 private:
  double beta_;
  double alpha_;
};

enum class SpecialFamily { exponential, weibull, gamma };

/// exponential -> (1,1); weibull(a) -> (a,a); gamma(a) -> (1,a). `shape` is ignored for exponential.
GeneralizedGammaParams make_special(SpecialFamily family, double shape = 1.0);

// Closed-form GG evaluations. All throw DomainError for t <= 0 (t < 0 for the CDF).
double gg_pdf(const GeneralizedGammaParams& p, double t);
double gg_log_pdf(const GeneralizedGammaParams& p, double t);
double gg_cdf(const GeneralizedGammaParams& p, double t);
double gg_log_cdf(const GeneralizedGammaParams& p, double t);
double gg_reverse_hazard(const GeneralizedGammaParams& p, double t);
double gg_log_reverse_hazard(const GeneralizedGammaParams& p, double t);
/// f'(t)/f(t) = (alpha - 1)/t - beta t^(beta-1).
double gg_log_density_slope(const GeneralizedGammaParams& p, double t);
/// r'(t) = r(t) (f'(t)/f(t) - r(t)).
double gg_reverse_hazard_derivative(const GeneralizedGammaParams& p, double t);
/// eta(t) = -(alpha - 1 - beta t^beta - t r(t)), the GG closed form of -t r'(t)/r(t).
double gg_eta_closed_form(const GeneralizedGammaParams& p, double t);

/// Everything a caller may need at one abscissa, computed in a single pass.
struct BaselinePoint {
  double log_pdf;
  double log_cdf;
  double log_reverse_hazard;
  double log_density_slope;  ///< f'(t)/f(t), not a logarithm of anything
};

/// An absolutely continuous lifetime distribution on (0, inf) with F(t) > 0 for every t > 0.
///
/// Public members validate the argument and delegate to the virtual hooks.
/// Implementations work in log space; the plain accessors exponentiate.
class Baseline {
 public:
  virtual ~Baseline() = default;

  double pdf(double t) const;
  double log_pdf(double t) const;
  /// Defined for t >= 0 with cdf(0) = 0.
  double cdf(double t) const;
  double log_cdf(double t) const;
  double reverse_hazard(double t) const;
  double log_reverse_hazard(double t) const;
  double log_density_slope(double t) const;
  double reverse_hazard_derivative(double t) const;
  BaselinePoint evaluate(double t) const;

  /// Below this abscissa quantile searches stop bracketing by doubling and step in log space.
  double t_min() const noexcept { return 1e-8; }

  /// Canonical spec string, e.g. "gg:beta=0.8,alpha=0.5".
  virtual std::string describe() const = 0;
  virtual std::optional<GeneralizedGammaParams> generalized_gamma() const { return std::nullopt; }

 protected:
  virtual BaselinePoint do_evaluate(double t) const = 0;
  virtual double do_log_cdf(double t) const { return do_evaluate(t).log_cdf; }
};

class GeneralizedGamma final : public Baseline {
 public:
  explicit GeneralizedGamma(GeneralizedGammaParams params) : params_(params) {}

  const GeneralizedGammaParams& params() const noexcept { return params_; }
  std::string describe() const override;
  std::optional<GeneralizedGammaParams> generalized_gamma() const override { return params_; }

 protected:
  BaselinePoint do_evaluate(double t) const override;
  double do_log_cdf(double t) const override;

 private:
  GeneralizedGammaParams params_;
};

std::shared_ptr<const Baseline> make_baseline(const GeneralizedGammaParams& params);

/// Parses "gg:beta=<v>,alpha=<v>", "exp", "weibull:shape=<v>" or "gamma:shape=<v>".
/// Throws UsageError (with the character position) on malformed input and
/// DomainError on nonpositive shapes.
std::shared_ptr<const Baseline> parse_baseline(std::string_view spec);

/// psi(t) = t r(t), eta(t) = -t r'(t)/r(t), chi(t) = t^2 r'(t).
class ConditionFunctions {
 public:
  explicit ConditionFunctions(std::shared_ptr<const Baseline> baseline);

  double psi(double t) const;
  /// Evaluated as t (r(t) - f'(t)/f(t)), which stays finite where r underflows.
  double eta(double t) const;
  double chi(double t) const;

  const Baseline& baseline() const noexcept { return *baseline_; }

 private:
  std::shared_ptr<const Baseline> baseline_;
};

ConditionFunctions condition_functions(std::shared_ptr<const Baseline> baseline);

}  // namespace maxorder
