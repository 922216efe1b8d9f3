#pragma once

namespace kendall {

// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

// ln of the Pochhammer symbol (a)_k = a(a+1)...(a+k-1), a > 0, k >= 0.
// Exactly 0 for k = 0.
double pochhammer_log(double a, unsigned long k);

}  // namespace kendall
