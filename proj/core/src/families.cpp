#include "kendall/families.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kendall/bessel.hpp"
#include "kendall/errors.hpp"
#include "kendall/gammafn.hpp"
#include "kendall/lambert.hpp"
#include "kendall/series.hpp"
#include "kendall/stable.hpp"

namespace kendall {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

long long as_atom(double y, const char* who) {
  const double r = std::round(y);
  if (!(std::fabs(y - r) <= 1e-6) || r < 0.0)
    throw std::invalid_argument(std::string(who) + ": expected a nonnegative integer atom");
  return static_cast<long long>(r);
}

// Alternating geometric stable series shared by p_X, p_Y and pi_Y:
//   S(m, w) = sum_{k>=0} (-1)^k (1+m)_k w^{alpha(m+k)} / (Gamma(1+alpha(m+k)) k!)
// evaluated under the common truncation/cancellation contract. Refuses
// (precision loss) instead of returning garbage outside the validated range.
SeriesValue geom_series(double m, double w, double alpha) {
  const double lw = std::log(w);
  SeriesAccumulator acc;
  for (unsigned long k = 0;; ++k) {
    const double kk = static_cast<double>(k);
    const double lt = pochhammer_log(1.0 + m, k) - log_gamma(1.0 + alpha * (m + kk)) -
                      log_gamma(1.0 + kk) + alpha * (m + kk) * lw;
    if (lt > 700.0) throw precision_loss_error("geom-stable series: term overflow");
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    if (!acc.add(sgn * std::exp(lt))) break;
  }
  SeriesValue s = acc.result();
  if (acc.hit_cap() || !s.reliable())
    throw precision_loss_error("geom-stable series: cancellation beyond the cap");
  return s;
}

DensityPoint from_series(double t, double y, double log_prefactor, const SeriesValue& s) {
  DensityPoint p;
  p.t = t;
  p.y = y;
  const double pref = std::exp(log_prefactor);
  double v = pref * s.value;
  if (!(v > 0.0)) v = 0.0;
  p.value = v;
  p.log_value = v > 0.0 ? log_prefactor + std::log(s.value) : kNegInf;
  p.abs_err = pref * s.abs_err;
  return p;
}

DensityPoint stable_point(double t, double y, double log_scale, double arg, double alpha) {
  const SeriesValue g = stable_g(arg, alpha);
  return from_series(t, y, log_scale, g);
}

}  // namespace

DensityPoint DensityPoint::from_log(double t, double y, double log_value, double abs_err) {
  DensityPoint p;
  p.t = t;
  p.y = y;
  p.log_value = log_value;
  p.value = log_value < -745.0 ? 0.0 : std::exp(log_value);
  p.abs_err = abs_err;
  return p;
}

DensityPoint base_density(const FamilyParams& params, double t, double x) {
  if (!(t > 0.0)) throw std::invalid_argument("base_density: t > 0");
  const double c = params.c, th = params.theta, a = params.alpha;
  switch (params.family) {
    case Family::poisson: {
      const long long n = as_atom(x, "base_density[poisson]");
      const double nn = static_cast<double>(n);
      return DensityPoint::from_log(t, nn, nn * std::log(c * t) - c * t - log_gamma(nn + 1.0));
    }
    case Family::gamma: {
      if (!(x > 0.0)) throw std::invalid_argument("base_density[gamma]: x > 0");
      const double ct = c * t;
      return DensityPoint::from_log(
          t, x, (ct - 1.0) * std::log(x) - x / th - ct * std::log(th) - log_gamma(ct));
    }
    case Family::stable_low: {
      if (!(x > 0.0)) throw std::invalid_argument("base_density[stable-low]: x > 0");
      const double lsc = -std::log(c * t) / a;  // ln (ct)^{-1/a}
      return stable_point(t, x, lsc, x * std::exp(lsc), a);
    }
    case Family::stable_high: {
      // base process is the spectrally negative xi itself; x ranges over R
      const double lsc = -std::log(c * t) / a;
      return stable_point(t, x, lsc, (x - t) * std::exp(lsc), a);
    }
    case Family::bessel: {
      if (!(x > 0.0)) throw std::invalid_argument("base_density[bessel]: x > 0");
      // c t x^{-1} e^{-x/th} I_{ct}(x/th); the e^{-x/th} is the Bessel scaling
      return DensityPoint::from_log(
          t, x, std::log(c * t) - std::log(x) + log_bessel_i_scaled(c * t, x / th));
    }
    case Family::geom_stable: {
      if (!(x > 0.0)) throw std::invalid_argument("base_density[geom-stable]: x > 0");
      const SeriesValue s = geom_series(c * t, x / th, a);
      return from_series(t, x, std::log(a * c * t / x), s);
    }
    case Family::inverse_gaussian: {
      if (!(x > 0.0)) throw std::invalid_argument("base_density[inverse-gaussian]: x > 0");
      const double mu = 0.5 * t * c * th;
      const double lv = std::log(0.5 * t * c) + 0.5 * std::log(th / M_PI) -
                        1.5 * std::log(x) - (x - mu) * (x - mu) / (th * x);
      return DensityPoint::from_log(t, x, lv);
    }
  }
  throw std::invalid_argument("base_density: unknown family");
}

DensityPoint transition_from_base(const ExponentHandle& h, double t, double y) {
  const FamilyParams& params = h.params();
  if (params.family == Family::poisson)
    throw std::invalid_argument("transition_from_base: Poisson base has no density");
  if (!(t > 0.0) || !(y > 0.0)) throw std::invalid_argument("transition_from_base: t, y > 0");

  if (params.family == Family::stable_high) {
    // Kendall density form: p_Y(t,y) = (t/y) p_xi(y, t)
    DensityPoint base = base_density(params, y, t);
    DensityPoint p;
    p.t = t;
    p.y = y;
    p.log_value = std::log(t) - std::log(y) + base.log_value;
    p.value = p.log_value < -745.0 ? 0.0 : std::exp(p.log_value);
    p.abs_err = t / y * base.abs_err;
    return p;
  }

  DensityPoint base = base_density(params, t + y, y);
  DensityPoint p;
  p.t = t;
  p.y = y;
  const double lpre = std::log(t / (t + y)) + h.killing() * t;
  p.log_value = lpre + base.log_value;
  p.value = p.log_value < -745.0 ? 0.0 : std::exp(p.log_value);
  p.abs_err = std::exp(lpre) * base.abs_err;
  return p;
}

DensityPoint transition_density(const ExponentHandle& h, double t, double y) {
  const FamilyParams& params = h.params();
  if (!(t > 0.0)) throw std::invalid_argument("transition_density: t > 0");
  const double c = params.c, th = params.theta, a = params.alpha;
  switch (params.family) {
    case Family::poisson: {
      const long long n = as_atom(y, "transition_density[poisson]");
      const double nn = static_cast<double>(n);
      const double kill = h.killing();
      const double lv = std::log(c * t) + (nn - 1.0) * std::log(c * (nn + t)) -
                        log_gamma(nn + 1.0) - c * (nn + t) + kill * t;
      return DensityPoint::from_log(t, nn, lv);
    }
    case Family::gamma: {
      if (!(y > 0.0)) throw std::invalid_argument("transition_density[gamma]: y > 0");
      const double m = c * (t + y);
      const double lv = std::log(c * t / th) - log_gamma(1.0 + m) +
                        (m - 1.0) * std::log(y / th) - y / th + h.killing() * t;
      return DensityPoint::from_log(t, y, lv);
    }
    case Family::stable_low: {
      if (!(y > 0.0)) throw std::invalid_argument("transition_density[stable-low]: y > 0");
      const double lsc = -std::log(c * (t + y)) / a;
      const double lpre = std::log(t) + h.killing() * t + lsc - std::log(t + y);
      return stable_point(t, y, lpre, y * std::exp(lsc), a);
    }
    case Family::stable_high: {
      if (!(y > 0.0)) throw std::invalid_argument("transition_density[stable-high]: y > 0");
      const double lsc = -std::log(c * y) / a;
      const double lpre = std::log(t) + lsc - std::log(y);
      return stable_point(t, y, lpre, (t - y) * std::exp(lsc), a);
    }
    case Family::bessel: {
      if (!(y > 0.0)) throw std::invalid_argument("transition_density[bessel]: y > 0");
      const double lv = std::log(c * t) - std::log(y) + h.killing() * t +
                        log_bessel_i_scaled(c * (t + y), y / th);
      return DensityPoint::from_log(t, y, lv);
    }
    case Family::geom_stable: {
      if (!(y > 0.0)) throw std::invalid_argument("transition_density[geom-stable]: y > 0");
      const SeriesValue s = geom_series(c * (t + y), y / th, a);
      return from_series(t, y, std::log(a * c * t / y) + h.killing() * t, s);
    }
    case Family::inverse_gaussian:
      return transition_from_base(h, t, y);  // Y is again inverse Gaussian
  }
  throw std::invalid_argument("transition_density: unknown family");
}

DensityPoint levy_density(const ExponentHandle& h, double y) {
  const FamilyParams& params = h.params();
  const double c = params.c, th = params.theta, a = params.alpha;
  switch (params.family) {
    case Family::poisson: {
      const long long n = as_atom(y, "levy_density[poisson]");
      if (n < 1) throw std::invalid_argument("levy_density[poisson]: n >= 1");
      const double nn = static_cast<double>(n);
      const double lv =
          (nn - 1.0) * std::log(nn) + nn * std::log(c) - c * nn - log_gamma(nn + 1.0);
      return DensityPoint::from_log(0.0, nn, lv);
    }
    case Family::gamma: {
      if (!(y > 0.0)) throw std::invalid_argument("levy_density[gamma]: y > 0");
      const double lv = std::log(c / th) - log_gamma(1.0 + c * y) +
                        (c * y - 1.0) * std::log(y / th) - y / th;
      return DensityPoint::from_log(0.0, y, lv);
    }
    case Family::stable_low: {
      if (!(y > 0.0)) throw std::invalid_argument("levy_density[stable-low]: y > 0");
      const double lsc = -std::log(c) / a - (1.0 / a + 1.0) * std::log(y);
      const double arg = std::pow(c, -1.0 / a) * std::pow(y, 1.0 - 1.0 / a);
      return stable_point(0.0, y, lsc, arg, a);
    }
    case Family::stable_high: {
      if (!(y > 0.0)) throw std::invalid_argument("levy_density[stable-high]: y > 0");
      const double lsc = -std::log(c) / a - (1.0 / a + 1.0) * std::log(y);
      const double arg = -std::pow(c, -1.0 / a) * std::pow(y, 1.0 - 1.0 / a);
      return stable_point(0.0, y, lsc, arg, a);
    }
    case Family::bessel: {
      if (!(y > 0.0)) throw std::invalid_argument("levy_density[bessel]: y > 0");
      return DensityPoint::from_log(
          0.0, y, std::log(c) - std::log(y) + log_bessel_i_scaled(c * y, y / th));
    }
    case Family::geom_stable: {
      if (!(y > 0.0)) throw std::invalid_argument("levy_density[geom-stable]: y > 0");
      const SeriesValue s = geom_series(c * y, y / th, a);
      return from_series(0.0, y, std::log(a * c / y), s);
    }
    case Family::inverse_gaussian: {
      if (!(y > 0.0)) throw std::invalid_argument("levy_density[inverse-gaussian]: y > 0");
      DensityPoint base = base_density(params, y, y);
      DensityPoint p;
      p.t = 0.0;
      p.y = y;
      p.log_value = base.log_value - std::log(y);
      p.value = p.log_value < -745.0 ? 0.0 : std::exp(p.log_value);
      return p;
    }
  }
  throw std::invalid_argument("levy_density: unknown family");
}

double levy_total_mass_poisson(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("levy_total_mass_poisson: c > 0");
  return -lambert_w0(-c * std::exp(-c));
}

double tail_asymptotic(const FamilyParams& params, double y) {
  switch (params.family) {
    case Family::poisson: {
      const double c = params.c;
      const double n = y;
      const double rate = c - 1.0 - std::log(c);
      return std::exp(-0.5 * std::log(2.0 * M_PI) - 1.5 * std::log(n) - rate * n);
    }
    case Family::gamma: {
      const double c = params.c, th = params.theta;
      const double rate = std::log(th * c) - 1.0 + 1.0 / (th * c);
      return std::exp(0.5 * std::log(c / (2.0 * M_PI)) - 1.5 * std::log(y) - rate * c * y);
    }
    default:
      throw std::invalid_argument("tail_asymptotic: only poisson and gamma families");
  }
}

}  // namespace kendall
