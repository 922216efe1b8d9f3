#pragma once

#include <string>
#include <vector>

#include "kendall/exponents.hpp"
#include "kendall/quadrature.hpp"

namespace kendall {

// Outcome of one identity check. pass is decided by abs_err <= tol,
// rel_err <= tol, or either, according to mode.
struct CheckReport {
  enum class Mode { absolute, relative, either };

  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
  Mode mode = Mode::either;
  std::string detail;

  static CheckReport make(const std::string& name, double lhs, double rhs, double tol,
                          Mode mode = Mode::either, const std::string& detail = "");
};

std::vector<double> linear_grid(double start, double stop, int count);
std::vector<double> log_grid(double start, double stop, int count);

// Laplace transform identity (the paper's central consequence):
//   int_0^inf e^{-z y} P(Y_t in dy) = e^{-t Phi_Y(z)}.
// The left side is an independent quadrature (sum for the Poisson family,
// including the n = 0 atom) over the closed-form transition density.
CheckReport check_laplace_identity(const FamilyParams& params, double t, double z, double tol);

// Kendall's integral identity for the Poisson and Gamma families:
//   int_y^inf P(tau_x^+ <= t) dx/x = int_0^t P(xi_s > y) ds/s,  t > y > 0.
CheckReport check_kendall_identity(const FamilyParams& params, double y, double t, double tol);

// Lambert W identities:
//   series:   sum_{n>=0} r (n+r)^{n-1} z^n / n! = e^{-r W0(-z)},   |z| < 1/e
//   integral: -int_{-r}^inf r (w+r)^{w-1}/Gamma(1+w) t^w dw = e^{-r W_{-1}(-t)},
//             r < 0, 0 < t < 1/e.
CheckReport check_w_series(double r, double z, double tol);
CheckReport check_w_integral(double r, double t, double tol);

// The explicit integral identities of the stable/Bessel constructions
// (example_id in {2,3,4,5}); c and theta only affect example 5.
CheckReport check_integral_identity(int example_id, double t, double q, double tol, double c = 1.0,
                                    double theta = 1.0);

// Divided-difference complete monotonicity test of f1..f5 on a grid:
// passes iff (-1)^k Delta^k f >= -(tol * scale + roundoff bound) for all
// k <= max_order over every window of grid nodes. The roundoff bound is
// computed from the actual node spacings, so violations must exceed provable
// noise to count. f_id "control" runs the non-CM negative control sin(y)+2.
CheckReport check_complete_monotonicity(const std::string& f_id, double c, double alpha,
                                        int max_order, const std::vector<double>& grid,
                                        double tol);

// Closed-form cross checks of the stable density:
//   one_third:  g(x;1/3)  vs x^{-3/2}/(3 pi) K_{1/3}(2/(3 sqrt(3x)))
//   two_thirds: g(x;2/3)  vs sqrt(3/pi) x^{-1} e^{-2/(27x^2)} W_{1/2,1/6}(4/(27x^2))
//   duality:    x g(x;3/2) vs x^{-3/2} g(x^{-3/2}; 2/3)
// One report per grid point is appended; the summary report is returned.
std::vector<CheckReport> check_stable_closed_forms(const std::string& alpha_case,
                                                   const std::vector<double>& x_grid, double tol);

// Inverse Gaussian closure: fits Phi_Y(z) = c'(sqrt(1 + theta' z) - 1) from
// two points and compares at n_check further points.
CheckReport check_ig_closure(double c, double theta, double tol, int n_check = 20);

// Poisson family PMF total mass sum_n P(Y_t = n). Direct summation for
// c != 1; at c = 1 the power-law tail is completed with a Hurwitz-zeta
// correction (direct summation alone cannot reach 1e-10).
double poisson_pmf_total(double c, double t, double* abs_err = nullptr);

// Named suites used by the CLI. Every report in a default suite passes on a
// correct build.
std::vector<CheckReport> suite_laplace();
std::vector<CheckReport> suite_laplace_for(const FamilyParams& params, double tol);
std::vector<CheckReport> suite_kendall();
std::vector<CheckReport> suite_cm();
std::vector<CheckReport> suite_crosscheck();
std::vector<CheckReport> suite_identities();
std::vector<CheckReport> suite_ig_closure();
std::vector<CheckReport> suite_all();

}  // namespace kendall
