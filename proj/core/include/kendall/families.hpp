#pragma once

#include "kendall/exponents.hpp"

namespace kendall {

// One density/PMF evaluation. value = exp(log_value) whenever representable;
// log_value stays finite when value underflows. For the Poisson family y
// holds the integer atom n.
struct DensityPoint {
  double t = 0.0;
  double y = 0.0;
  double value = 0.0;
  double log_value = 0.0;
  double abs_err = 0.0;  // nonzero only for series-backed families

  static DensityPoint from_log(double t, double y, double log_value, double abs_err = 0.0);
};

// Transition density p_X(t, x) of the driving process (PMF P(N_{ct} = n) for
// the Poisson family, x real for stable_high where the base process is the
// spectrally negative xi itself). Log-space evaluation throughout.
DensityPoint base_density(const FamilyParams& params, double t, double x);

// Generic Kendall construction of p_Y:
//   p_Y(t,y) = (t/(t+y)) e^{phi(0) t} p_X(t+y, y)        (subordinator base)
//   p_Y(t,y) = (t/y) p_xi(y, t)                          (stable_high)
// Defined for the absolutely continuous families (all but Poisson).
DensityPoint transition_from_base(const ExponentHandle& h, double t, double y);

// Family-specific closed form for p_Y(t, y) (P(Y_t = n) for Poisson).
// Agrees with transition_from_base where both are defined.
DensityPoint transition_density(const ExponentHandle& h, double t, double y);

// Levy density pi_Y(y) (mass Pi_Y({n}) for Poisson, n >= 1).
DensityPoint levy_density(const ExponentHandle& h, double y);

// Total mass of the Poisson family's Levy measure:
// sum_n Pi_Y({n}) = -W0(-c e^{-c}), equal to c for c <= 1.
double levy_total_mass_poisson(double c);

// Leading tail asymptotics of the Levy measure:
//   Poisson: (2 pi)^{-1/2} n^{-3/2} exp(-(c - 1 - ln c) n)
//   Gamma:   sqrt(c/(2 pi)) y^{-3/2} exp(-(ln(theta c) - 1 + 1/(theta c)) c y)
// Only these two families are supported.
double tail_asymptotic(const FamilyParams& params, double y);

}  // namespace kendall
