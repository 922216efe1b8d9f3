#include "kendall/exponents.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "kendall/errors.hpp"
#include "kendall/lambert.hpp"

namespace kendall {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Solve f(z) = 0 on a bracket with f(lo) <= 0 <= f(hi), f increasing.
// Newton from the convex side, bisection whenever a step leaves the bracket.
template <typename F, typename Fp>
double solve_on_bracket(F f, Fp fp, double lo, double hi, double target, const char* who) {
  double z = hi;
  double fz = f(z);
  for (int it = 0; it < 200; ++it) {
    if (std::fabs(fz) <= target) return z;
    if (fz > 0.0)
      hi = z;
    else
      lo = z;
    const double d = fp(z);
    double zn = (d > 0.0 && std::isfinite(d)) ? z - fz / d : std::numeric_limits<double>::quiet_NaN();
    if (!(zn > lo && zn < hi)) zn = 0.5 * (lo + hi);
    if (zn == z) {
      zn = 0.5 * (lo + hi);
      if (zn == z) return z;  // bracket exhausted at machine precision
    }
    z = zn;
    fz = f(z);
  }
  throw convergence_error(std::string(who) + ": iteration cap reached");
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::poisson: return "poisson";
    case Family::gamma: return "gamma";
    case Family::stable_low: return "stable-low";
    case Family::stable_high: return "stable-high";
    case Family::bessel: return "bessel";
    case Family::geom_stable: return "geom-stable";
    case Family::inverse_gaussian: return "inverse-gaussian";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "poisson") return Family::poisson;
  if (name == "gamma") return Family::gamma;
  if (name == "stable-low") return Family::stable_low;
  if (name == "stable-high") return Family::stable_high;
  if (name == "bessel") return Family::bessel;
  if (name == "geom-stable") return Family::geom_stable;
  if (name == "inverse-gaussian") return Family::inverse_gaussian;
  throw std::invalid_argument("unknown family: " + name);
}

FamilyParams FamilyParams::poisson(double c) {
  require(c > 0.0 && std::isfinite(c), "poisson: c > 0");
  return {Family::poisson, c, 0.0, 0.0};
}
FamilyParams FamilyParams::gamma(double c, double theta) {
  require(c > 0.0 && std::isfinite(c), "gamma: c > 0");
  require(theta > 0.0 && std::isfinite(theta), "gamma: theta > 0");
  return {Family::gamma, c, theta, 0.0};
}
FamilyParams FamilyParams::stable_low(double c, double alpha) {
  require(c > 0.0 && std::isfinite(c), "stable-low: c > 0");
  require(alpha > 0.0 && alpha < 1.0, "stable-low: alpha in (0,1)");
  return {Family::stable_low, c, 0.0, alpha};
}
FamilyParams FamilyParams::stable_high(double c, double alpha) {
  require(c > 0.0 && std::isfinite(c), "stable-high: c > 0");
  require(alpha > 1.0 && alpha < 2.0, "stable-high: alpha in (1,2)");
  return {Family::stable_high, c, 0.0, alpha};
}
FamilyParams FamilyParams::bessel(double c, double theta) {
  require(c > 0.0 && std::isfinite(c), "bessel: c > 0");
  require(theta > 0.0 && std::isfinite(theta), "bessel: theta > 0");
  return {Family::bessel, c, theta, 0.0};
}
FamilyParams FamilyParams::geom_stable(double c, double theta, double alpha) {
  require(c > 0.0 && std::isfinite(c), "geom-stable: c > 0");
  require(theta > 0.0 && std::isfinite(theta), "geom-stable: theta > 0");
  require(alpha > 0.0 && alpha < 1.0, "geom-stable: alpha in (0,1)");
  return {Family::geom_stable, c, theta, alpha};
}
FamilyParams FamilyParams::inverse_gaussian(double c, double theta) {
  require(c > 0.0 && std::isfinite(c), "inverse-gaussian: c > 0");
  require(theta > 0.0 && std::isfinite(theta), "inverse-gaussian: theta > 0");
  return {Family::inverse_gaussian, c, theta, 0.0};
}

bool FamilyParams::uses_theta() const {
  return family == Family::gamma || family == Family::bessel || family == Family::geom_stable ||
         family == Family::inverse_gaussian;
}
bool FamilyParams::uses_alpha() const {
  return family == Family::stable_low || family == Family::stable_high ||
         family == Family::geom_stable;
}

ExponentHandle::ExponentHandle(const FamilyParams& params) : params_(params) {
  killing_ = compute_killing();
}

double ExponentHandle::phi_x(double z) const {
  const double c = params_.c, th = params_.theta, a = params_.alpha;
  switch (params_.family) {
    case Family::poisson: return -c * std::expm1(-z);
    case Family::gamma: return c * std::log1p(th * z);
    case Family::stable_low: return c * std::pow(z, a);
    case Family::bessel: {
      const double u = 1.0 + th * z;
      return c * std::log(u + std::sqrt(th * z * (2.0 + th * z)));
    }
    case Family::geom_stable: return c * std::log1p(std::pow(th * z, a));
    case Family::inverse_gaussian: return c * th * z / (std::sqrt(1.0 + th * z) + 1.0);
    case Family::stable_high: return 0.0;  // psi is specified directly
  }
  return 0.0;
}

double ExponentHandle::phi_x_prime(double z) const {
  const double c = params_.c, th = params_.theta, a = params_.alpha;
  switch (params_.family) {
    case Family::poisson: return c * std::exp(-z);
    case Family::gamma: return c * th / (1.0 + th * z);
    case Family::stable_low: return z == 0.0 ? kInf : c * a * std::pow(z, a - 1.0);
    case Family::bessel:
      return z == 0.0 ? kInf : c * th / std::sqrt(th * z * (2.0 + th * z));
    case Family::geom_stable: {
      if (z == 0.0) return kInf;
      const double w = std::pow(th * z, a);
      return c * a * w / (z * (1.0 + w));
    }
    case Family::inverse_gaussian: return 0.5 * c * th / std::sqrt(1.0 + th * z);
    case Family::stable_high: return 0.0;
  }
  return 0.0;
}

double ExponentHandle::psi(double z) const {
  if (params_.family == Family::stable_high)
    return z + params_.c * std::pow(z, params_.alpha);
  return z - phi_x(z);
}

double ExponentHandle::psi_prime(double z) const {
  if (params_.family == Family::stable_high)
    return 1.0 + params_.c * params_.alpha * std::pow(z, params_.alpha - 1.0);
  return 1.0 - phi_x_prime(z);
}

double ExponentHandle::phi_x_prime_at_zero() const {
  switch (params_.family) {
    case Family::poisson: return params_.c;
    case Family::gamma: return params_.c * params_.theta;
    case Family::stable_low:
    case Family::bessel:
    case Family::geom_stable: return kInf;
    case Family::inverse_gaussian: return 0.5 * params_.c * params_.theta;
    case Family::stable_high: return 0.0;
  }
  return 0.0;
}

double ExponentHandle::compute_killing() const {
  if (params_.family == Family::stable_high) return 0.0;  // psi'(0+) = 1 > 0
  if (params_.family == Family::stable_low)
    return std::pow(params_.c, 1.0 / (1.0 - params_.alpha));
  if (phi_x_prime_at_zero() <= 1.0) return 0.0;

  // unique positive root of psi(z) = 0; psi < 0 on (0, root), > 0 beyond
  double hi = 1.0;
  int guard = 0;
  while (psi(hi) <= 0.0) {
    hi *= 2.0;
    if (++guard > 2000) throw convergence_error("killing: no upper bracket found");
  }
  double lo = 0.5 * hi;
  while (psi(lo) >= 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) throw convergence_error("killing: no lower bracket found");
  }
  const auto f = [this](double z) { return psi(z); };
  const auto fp = [this](double z) { return psi_prime(z); };
  return solve_on_bracket(f, fp, lo, hi, 1e-13 * std::max(1.0, hi), "killing_rate");
}

ExponentHandle build_exponent(const FamilyParams& params) { return ExponentHandle(params); }

double killing_rate(const ExponentHandle& h) { return h.killing(); }

PhiResult invert_phi(const ExponentHandle& h, double q) {
  if (!(q >= 0.0)) throw std::invalid_argument("invert_phi: q >= 0");
  PhiResult out;
  out.q = q;
  out.killing = h.killing();
  out.method = PhiResult::Method::root_find;
  if (q == 0.0) {
    out.value = out.killing;
    out.residual = std::fabs(h.psi(out.killing));
    return out;
  }

  const double target = 0.25e-11 * std::max(1.0, q);
  double lo = out.killing;  // psi(killing) = 0 <= q
  double hi = std::max({q, out.killing, 1.0});
  int guard = 0;
  while (h.psi(hi) < q) {
    hi *= 2.0;
    if (++guard > 2000) throw convergence_error("invert_phi: no upper bracket found");
  }
  const auto f = [&h, q](double z) { return h.psi(z) - q; };
  const auto fp = [&h](double z) { return h.psi_prime(z); };
  out.value = solve_on_bracket(f, fp, lo, hi, target, "invert_phi");
  out.residual = std::fabs(h.psi(out.value) - q);
  return out;
}

double phi_closed_poisson(double c, double q) {
  require(c > 0.0, "phi_closed_poisson: c > 0");
  require(q >= 0.0, "phi_closed_poisson: q >= 0");
  return lambert_w0(-c * std::exp(-c - q)) + c + q;
}

double phi_closed_gamma(double c, double theta, double q) {
  require(c > 0.0 && theta > 0.0, "phi_closed_gamma: c, theta > 0");
  require(q >= 0.0, "phi_closed_gamma: q >= 0");
  const double a = 1.0 / (theta * c);
  return -1.0 / theta - c * lambert_wm1(-a * std::exp(-a - q / c));
}

double phi_y(const ExponentHandle& h, double z) {
  if (!(z >= 0.0)) throw std::invalid_argument("phi_y: z >= 0");
  if (z == 0.0) return 0.0;
  const PhiResult r = invert_phi(h, z);
  if (h.params().family == Family::stable_high) return r.value;
  return r.value - r.killing - z;
}

double mean_y(const ExponentHandle& h) {
  if (h.params().family == Family::stable_high) return kInf;
  const double d = h.psi_prime(h.killing());
  if (!(d > 1e-12)) return kInf;
  return 1.0 / d - 1.0;
}

}  // namespace kendall
