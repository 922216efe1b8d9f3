#include "kendall/gammafn.hpp"

#include <cmath>
#include <stdexcept>

namespace kendall {

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: require x > 0");
  return std::lgamma(x);
}

double pochhammer_log(double a, unsigned long k) {
  if (!(a > 0.0)) throw std::domain_error("pochhammer_log: require a > 0");
  if (k == 0) return 0.0;
  return std::lgamma(a + static_cast<double>(k)) - std::lgamma(a);
}

}  // namespace kendall
