#include "kendall/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kendall/quadrature.hpp"

namespace kendall {
namespace {

// Streaming log-sum-exp of the ascending series
//   I_nu(x) = sum_k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)).
// All terms are positive, so no cancellation; returns ln I_nu(x).
double log_besseli_series(double nu, double x) {
  const double lh = std::log(0.5 * x);
  double lt = nu * lh - std::lgamma(nu + 1.0);
  double m = lt;
  double s = 1.0;
  const double peak = 0.5 * (std::sqrt((nu + 1.0) * (nu + 1.0) + x * x) - (nu + 1.0));
  const long k_max = static_cast<long>(peak) + 80 + static_cast<long>(12.0 * std::sqrt(peak + 1.0));
  for (long k = 1; k <= k_max; ++k) {
    lt += 2.0 * lh - std::log(static_cast<double>(k)) - std::log(nu + static_cast<double>(k));
    if (lt > m) {
      s = s * std::exp(m - lt) + 1.0;
      m = lt;
    } else {
      s += std::exp(lt - m);
      if (lt < m - 42.0 && static_cast<double>(k) > peak) break;
    }
  }
  return m + std::log(s);
}

// Uniform large-order (Debye) expansion of ln I_nu(nu z), two correction terms.
double log_besseli_debye(double nu, double x) {
  const double z = x / nu;
  const double r = std::sqrt(1.0 + z * z);
  const double eta = r + std::log(z / (1.0 + r));
  const double t = 1.0 / r;
  const double u1 = (3.0 * t - 5.0 * t * t * t) / 24.0;
  const double t2 = t * t;
  const double u2 = (81.0 * t2 - 462.0 * t2 * t2 + 385.0 * t2 * t2 * t2) / 1152.0;
  return nu * eta - 0.5 * std::log(2.0 * M_PI * nu) - 0.5 * std::log(r) +
         std::log1p(u1 / nu + u2 / (nu * nu));
}

// Hankel large-argument expansion of ln I_nu(x), for x >> nu^2.
double log_besseli_hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  const double a1 = -(mu - 1.0) / (8.0 * x);
  const double a2 = (mu - 1.0) * (mu - 9.0) / (128.0 * x * x);
  const double a3 = -(mu - 1.0) * (mu - 9.0) * (mu - 25.0) / (3072.0 * x * x * x);
  return x - 0.5 * std::log(2.0 * M_PI * x) + std::log1p(a1 + a2 + a3);
}

}  // namespace

double log_bessel_i_scaled(double nu, double x) {
  if (std::isnan(nu) || std::isnan(x) || nu < 0.0 || x < 0.0)
    throw std::domain_error("log_bessel_i_scaled: require nu >= 0, x >= 0");
  if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();

  const double peak = 0.5 * (std::sqrt((nu + 1.0) * (nu + 1.0) + x * x) - (nu + 1.0));
  if (peak < 40000.0) return log_besseli_series(nu, x) - x;
  // outside the series budget (far beyond the accuracy-contract box)
  if (nu >= 20.0 && x < 1e4 * nu) return log_besseli_debye(nu, x) - x;
  return log_besseli_hankel(nu, x) - x;
}

double bessel_i_scaled(double nu, double x) { return std::exp(log_bessel_i_scaled(nu, x)); }

double bessel_k(double nu, double x) {
  if (std::isnan(nu) || std::isnan(x) || x <= 0.0)
    throw std::domain_error("bessel_k: require x > 0");
  nu = std::fabs(nu);  // K is even in the order
  if (x > 740.0) return 0.0;  // K ~ sqrt(pi/2x) e^{-x} underflows

  // integrand e^{-x cosh t} cosh(nu t), evaluated in log space
  const auto f = [nu, x](double t) {
    const double a = nu * t;
    const double lcosh = a + std::log1p(std::exp(-2.0 * a)) - M_LN2;  // ln cosh(nu t)
    const double le = -x * std::cosh(t) + lcosh;
    return le < -745.0 ? 0.0 : std::exp(le);
  };
  return integrate_semiaxis(f, 1e-12).value;
}

}  // namespace kendall
