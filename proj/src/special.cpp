#include "maxorder/special.hpp"

#include <cmath>
#include <limits>

#include "maxorder/errors.hpp"

namespace maxorder::special {
namespace {

constexpr double kEps = 1e-17;
constexpr int kMaxIterations = 100000;
constexpr double kTiny = 1e-300;

// sum_{n>=0} x^n / ((s+1)(s+2)...(s+n)); converges geometrically once n > x - s.
double lower_series(double s, double x) {
  double term = 1.0;
  double sum = 1.0;
  double denom = s;
  for (int n = 0; n < kMaxIterations; ++n) {
    denom += 1.0;
    term *= x / denom;
    sum += term;
    if (term < sum * kEps) break;
  }
  return sum;
}

// Modified Lentz evaluation of the continued fraction for Q(s,x) * Gamma(s) * e^x * x^-s.
double upper_fraction(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps * 4) break;
  }
  return h;
}

}  // namespace

IncompleteGamma incomplete_gamma(double s, double x) {
  return incomplete_gamma(s, x, x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity());
}

IncompleteGamma incomplete_gamma(double s, double x, double log_x) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("incomplete_gamma: shape must be positive");
  if (!(x >= 0.0)) throw DomainError("incomplete_gamma: argument must be nonnegative");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (log_x == -kInf) return {-kInf, 0.0, true, 1.0};
  if (std::isinf(x)) return {0.0, -kInf, false, 0.0};

  if (x < s + 1.0) {
    const double sum = lower_series(s, x);
    const double log_p = s * log_x - x - std::lgamma(s + 1.0) + std::log(sum);
    return {log_p, std::log1p(-std::exp(log_p)), true, sum};
  }
  const double log_q = s * log_x - x - std::lgamma(s) + std::log(upper_fraction(s, x));
  return {std::log1p(-std::exp(log_q)), log_q, false, 0.0};
}

double gamma_p(double s, double x) {
  const auto g = incomplete_gamma(s, x);
  return g.series ? std::exp(g.log_p) : -std::expm1(g.log_q);
}

double gamma_q(double s, double x) {
  const auto g = incomplete_gamma(s, x);
  return g.series ? -std::expm1(g.log_p) : std::exp(g.log_q);
}

}  // namespace maxorder::special
