#pragma once

namespace kendall {

// ln(e^{-x} I_nu(x)) for nu >= 0, x >= 0. Always finite for x > 0 or nu = 0;
// returns -inf for x = 0, nu > 0. Evaluated in log space throughout so the
// large orders appearing in the Bessel-family densities (nu growing linearly
// with y) cannot overflow.
double log_bessel_i_scaled(double nu, double x);

// e^{-x} I_nu(x) in [0, 1]. Relative error <= 1e-10 for nu <= 500, x <= 500.
double bessel_i_scaled(double nu, double x);

// Modified Bessel function of the second kind, K_nu(x), x > 0, via adaptive
// quadrature of the integral representation
//   K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt.
// Even in nu. Used only for the closed-form cross checks, so robustness is
// preferred over speed.
double bessel_k(double nu, double x);

}  // namespace kendall
