#pragma once

#include <cstddef>
#include <functional>

namespace kendall {

struct QuadratureResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  long n_evals = 0;
};

// Adaptive Gauss-Kronrod (G7/K15) over [a, b]. Worst-panel-first subdivision
// until the summed error estimate is below max(abs_tol, rel_tol * |value|).
// Endpoints are never evaluated, so integrable endpoint singularities are
// tolerated (at the cost of deeper subdivision).
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol = 0.0,
                                    std::size_t max_panels = 100000);

// Integral over (0, inf). The unit interval is mapped through y = u^4 so
// algebraic endpoint singularities y^g, g > -1, become benign; beyond 1 the
// axis is covered by doubling panels [1,2], [2,4], ... with truncation once
// panel contributions fall below tol * |running total|, plus a geometric
// estimate of the dropped tail folded into abs_err_est.
QuadratureResult integrate_semiaxis(const std::function<double(double)>& f, double tol);

}  // namespace kendall
