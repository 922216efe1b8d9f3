#pragma once

namespace kendall {

// Mittag-Leffler function E_alpha(x) = sum_k x^k / Gamma(1 + alpha k) for
// alpha in (0, 1]. Three regimes:
//   x >= 0            power series (positive terms, log-sum-exp; may be +inf)
//   moderate x < 0    power series while cancellation stays within the cap
//   very negative x   branch-cut integral, and below -1e6 the asymptotic
//                     -1/(x Gamma(1-alpha))
// Relative error <= 1e-8 on |x| <= 50.
double mittag_leffler(double alpha, double x);

}  // namespace kendall
