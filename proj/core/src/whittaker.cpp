#include "kendall/whittaker.hpp"

#include <cmath>
#include <stdexcept>

#include "kendall/quadrature.hpp"

namespace kendall {

double hypergeometric_u(double p, double q, double x) {
  if (!(p > 0.0) || !(x > 0.0)) throw std::domain_error("hypergeometric_u: require p > 0, x > 0");

  const double lgp = std::lgamma(p);
  if (p >= 1.0) {
    const auto f = [p, q, x](double t) {
      const double le = -x * t + (p - 1.0) * std::log(t) + (q - p - 1.0) * std::log1p(t);
      return le < -745.0 ? 0.0 : std::exp(le);
    };
    return std::exp(-lgp) * integrate_semiaxis(f, 1e-12).value;
  }
  // p in (0,1): t = u^{1/p} removes the t^{p-1} endpoint singularity exactly:
  //   int_0^inf e^{-x t} t^{p-1} (1+t)^{q-p-1} dt = (1/p) int_0^inf e^{-x u^{1/p}} (1+u^{1/p})^{q-p-1} du
  const double ip = 1.0 / p;
  const auto f = [ip, p, q, x](double u) {
    const double t = std::pow(u, ip);
    const double le = -x * t + (q - p - 1.0) * std::log1p(t);
    return le < -745.0 ? 0.0 : std::exp(le);
  };
  return std::exp(-lgp) * ip * integrate_semiaxis(f, 1e-12).value;
}

double whittaker_w(double a, double b, double x) {
  const double p = b - a + 0.5;
  if (!(p > 0.0)) throw std::domain_error("whittaker_w: require b - a + 1/2 > 0");
  if (!(x > 0.0)) throw std::domain_error("whittaker_w: require x > 0");

  const double u = hypergeometric_u(p, 1.0 + 2.0 * b, x);
  const double le = -0.5 * x + (b + 0.5) * std::log(x) + std::log(u);
  return le < -745.0 ? 0.0 : std::exp(le);
}

}  // namespace kendall
