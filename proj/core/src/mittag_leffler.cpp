#include "kendall/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kendall/errors.hpp"
#include "kendall/quadrature.hpp"
#include "kendall/series.hpp"

namespace kendall {
namespace {

// 1/Gamma(w) for any real w; zero at the poles of Gamma.
double rgamma(double w) {
  if (w > 0.0) return std::exp(-std::lgamma(w));
  const double r = std::round(w);
  if (std::fabs(w - r) < 1e-12) return 0.0;
  return 1.0 / std::tgamma(w);
}

// E_alpha(x) for x >= 0 by streaming log-sum-exp (positive terms).
// Returns +inf when the value overflows double.
double ml_positive(double alpha, double x) {
  if (x == 0.0) return 1.0;
  const double lx = std::log(x);
  double m = 0.0, s = 1.0;  // k = 0 term
  double lt = 0.0;
  for (long k = 1; k < 200000; ++k) {
    lt = static_cast<double>(k) * lx - std::lgamma(1.0 + alpha * static_cast<double>(k));
    if (lt > m) {
      s = s * std::exp(m - lt) + 1.0;
      m = lt;
    } else {
      s += std::exp(lt - m);
      if (lt < m - 42.0) break;
    }
  }
  const double lv = m + std::log(s);
  return lv > 709.0 ? std::numeric_limits<double>::infinity() : std::exp(lv);
}

// Alternating power series for x < 0 with the cancellation diagnostic.
SeriesValue ml_series_negative(double alpha, double x) {
  const double lax = std::log(-x);
  SeriesAccumulator acc;
  acc.add(1.0);
  double sign = -1.0;
  for (long k = 1;; ++k) {
    const double lt = static_cast<double>(k) * lax - std::lgamma(1.0 + alpha * static_cast<double>(k));
    if (lt > 700.0) {  // term overflow: bail, caller falls back to the integral
      SeriesValue bad;
      bad.value = 0.0;
      bad.abs_err = std::numeric_limits<double>::infinity();
      bad.max_term = std::numeric_limits<double>::infinity();
      return bad;
    }
    if (!acc.add(sign * std::exp(lt))) break;
    sign = -sign;
  }
  return acc.result();
}

// Branch-cut representation for x < 0 (s = -x > 0), alpha in (0,1):
//   E_alpha(-s) = (s sin(pi alpha)/(pi alpha)) *
//                 int_0^inf e^{-u^{1/alpha}} / (u^2 + 2 s u cos(pi alpha) + s^2) du.
// Positive smooth integrand, no cancellation.
double ml_integral_negative(double alpha, double x) {
  const double s = -x;
  const double c = std::cos(M_PI * alpha);
  const double ia = 1.0 / alpha;
  const auto f = [s, c, ia](double u) {
    const double den = (u + s * c) * (u + s * c) + s * s * (1.0 - c * c);
    return std::exp(-std::pow(u, ia)) / den;
  };
  const double integral = integrate_semiaxis(f, 1e-12).value;
  return s * std::sin(M_PI * alpha) / (M_PI * alpha) * integral;
}

}  // namespace

double mittag_leffler(double alpha, double x) {
  if (!(alpha > 0.0) || alpha > 1.0) throw std::domain_error("mittag_leffler: alpha in (0,1]");
  if (std::isnan(x)) throw std::domain_error("mittag_leffler: x is NaN");
  if (alpha == 1.0) return std::exp(x);
  if (x == 0.0) return 1.0;
  if (x > 0.0) return ml_positive(alpha, x);

  if (x < -1e6) {
    // asymptotic branch: E_alpha(x) ~ -1/(x Gamma(1-alpha)) - 1/(x^2 Gamma(1-2alpha))
    return -rgamma(1.0 - alpha) / x - rgamma(1.0 - 2.0 * alpha) / (x * x);
  }

  const SeriesValue s = ml_series_negative(alpha, x);
  if (std::isfinite(s.max_term) && s.reliable(1e7)) return s.value;
  return ml_integral_negative(alpha, x);
}

}  // namespace kendall
