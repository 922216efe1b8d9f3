#pragma once

namespace kendall {

// Tricomi confluent hypergeometric U(p, q, x) for p > 0, x > 0, computed from
// the integral representation
//   U(p, q, x) = Gamma(p)^{-1} int_0^inf e^{-x t} t^{p-1} (1+t)^{q-p-1} dt.
double hypergeometric_u(double p, double q, double x);

// Whittaker W_{a,b}(x) for x > 0 via
//   W_{a,b}(x) = e^{-x/2} x^{b+1/2} U(b - a + 1/2, 1 + 2b, x),
// restricted to b - a + 1/2 > 0 (the only case the densities need is
// a = 1/2, b = 1/6). Relative error <= 1e-9. Underflows to 0 for very large x.
double whittaker_w(double a, double b, double x);

}  // namespace kendall
