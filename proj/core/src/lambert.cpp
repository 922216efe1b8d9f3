#include "kendall/lambert.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kendall/errors.hpp"

namespace kendall {
namespace {

constexpr double kEmInv = 0.36787944117144232159552377016146;  // e^{-1}
constexpr double kE = 2.71828182845904523536028747135266;

// Branch-point expansion in p = +-sqrt(2(e z + 1)); p >= 0 selects W0,
// p <= 0 selects W_{-1}.
double singularity_series(double p) {
  // -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + 769 p^5/17280 - 221 p^6/8505
  return -1.0 +
         p * (1.0 +
              p * (-1.0 / 3.0 +
                   p * (11.0 / 72.0 +
                        p * (-43.0 / 540.0 + p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
}

double residual(double w, double z) { return w * std::exp(w) - z; }

// Halley iteration on w e^w = z inside a verified bracket [wlo, whi] with
// f(wlo) <= 0 <= f(whi); f = w e^w - z is increasing on the W0 domain
// [-1, inf). Steps leaving the bracket fall back to bisection.
double polish(double w, double z, double wlo, double whi, double target) {
  double f = residual(w, z);
  for (int it = 0; it < 120; ++it) {
    if (std::fabs(f) <= target) return w;
    if (f > 0.0)
      whi = std::min(whi, w);
    else
      wlo = std::max(wlo, w);

    const double ew = std::exp(w);
    const double fp = ew * (1.0 + w);
    double wn;
    if (fp != 0.0) {
      const double step = f / (fp - f * (w + 2.0) / (2.0 * w + 2.0));
      wn = w - step;
    } else {
      wn = std::numeric_limits<double>::quiet_NaN();
    }
    if (!(wn > wlo && wn < whi)) wn = 0.5 * (wlo + whi);
    if (wn == w) {
      // stalled at machine resolution; bisect once, then accept best
      wn = 0.5 * (wlo + whi);
      if (wn == w) return w;
    }
    w = wn;
    f = residual(w, z);
  }
  return w;
}

}  // namespace

double lambert_w0(double z) {
  if (std::isnan(z)) throw std::domain_error("lambert_w0: z is NaN");
  const double pad = 1e-12;
  if (z < -kEmInv) {
    if (z < -kEmInv - pad) throw std::domain_error("lambert_w0: z < -1/e");
    z = -kEmInv;
  }
  if (z == 0.0) return 0.0;
  if (z == -kEmInv) return -1.0;

  const double target = 0.25e-14 * std::max(1.0, std::fabs(z));

  const double p2 = 2.0 * kE * (z + kEmInv);
  double w;
  if (z < 0.0 && p2 < 1e-3) {
    w = singularity_series(std::sqrt(std::max(p2, 0.0)));
    if (std::fabs(residual(w, z)) <= target) return w;
  } else if (std::fabs(z) < 0.3) {
    // truncated Taylor series at 0, enough as a Halley seed
    w = z * (1.0 + z * (-1.0 + z * (1.5 + z * (-8.0 / 3.0 + z * (125.0 / 24.0)))));
  } else if (z > kE) {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  } else {
    w = 0.5;
  }

  // bracket: f is increasing on [-1, inf)
  double wlo = -1.0;
  double whi;
  if (z <= 0.0)
    whi = 0.0;
  else if (z <= kE)
    whi = 1.0;
  else
    whi = std::log(z);
  if (!(w > wlo && w < whi)) w = 0.5 * (wlo + whi);

  w = polish(w, z, wlo, whi, target);
  if (std::fabs(residual(w, z)) > 4.0 * target)
    throw convergence_error("lambert_w0: residual target not reached");
  return w;
}

double lambert_wm1(double z) {
  if (std::isnan(z)) throw std::domain_error("lambert_wm1: z is NaN");
  const double pad = 1e-12;
  if (z >= 0.0) throw std::domain_error("lambert_wm1: require z < 0");
  if (z < -kEmInv) {
    if (z < -kEmInv - pad) throw std::domain_error("lambert_wm1: z < -1/e");
    z = -kEmInv;
  }
  if (z == -kEmInv) return -1.0;

  const double target = 0.25e-14 * std::fabs(z);

  const double p2 = 2.0 * kE * (z + kEmInv);
  double w;
  if (p2 < 1e-3) {
    w = singularity_series(-std::sqrt(std::max(p2, 0.0)));
    if (std::fabs(residual(w, z)) <= target) return w;
  } else {
    const double l1 = std::log(-z);  // <= -1
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
    if (!(w <= -1.0)) w = -1.0000001;
  }

  // f(w) = w e^w - z is decreasing on (-inf, -1]: f(-1) <= 0, f(-inf) -> -z > 0.
  double whi = -1.0;
  double wlo = std::min(w - 1.0, -2.0);
  for (int k = 0; k < 200 && residual(wlo, z) < 0.0; ++k) wlo = -2.0 * std::fabs(wlo);

  if (!(w > wlo && w < whi)) w = 0.5 * (wlo + whi);

  // polish() assumes increasing f when whi > -1; here the branch is decreasing,
  // so flip the sign convention by solving for f~(w) = -(w e^w - z).
  double f = residual(w, z);
  for (int it = 0; it < 120; ++it) {
    if (std::fabs(f) <= target) break;
    if (f > 0.0)
      wlo = std::max(wlo, w);
    else
      whi = std::min(whi, w);
    const double ew = std::exp(w);
    const double fp = ew * (1.0 + w);
    double wn = std::numeric_limits<double>::quiet_NaN();
    if (fp != 0.0) wn = w - f / (fp - f * (w + 2.0) / (2.0 * w + 2.0));
    if (!(wn > wlo && wn < whi)) wn = 0.5 * (wlo + whi);
    if (wn == w) break;
    w = wn;
    f = residual(w, z);
  }
  if (std::fabs(residual(w, z)) > 4.0 * target)
    throw convergence_error("lambert_wm1: residual target not reached");
  return w;
}

}  // namespace kendall
