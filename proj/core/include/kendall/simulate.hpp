#pragma once

#include <cstdint>
#include <vector>

namespace kendall {

// Empirical PMF over integer atoms with binomial standard errors.
struct EmpiricalDist {
  std::vector<long long> support;
  std::vector<double> prob;
  std::vector<double> stderr_;
  std::uint64_t n_samples = 0;
  std::uint64_t n_censored = 0;
};

// Exact event-by-event simulation of the first passage of xi_t = t - N_{ct}
// over level x: exponential(c) inter-arrival times, unit down-jumps, unit
// drift. Records tau_x^+ - x, a nonnegative integer. Samples use independent
// counter-derived streams, so the result is bit-identical for a fixed seed
// regardless of worker count. Samples not crossing by the horizon are
// censored.
EmpiricalDist simulate_first_passage_poisson(double c, double x, double horizon,
                                             std::uint64_t n_samples, std::uint64_t seed,
                                             int workers = 1);

// Direct compound Poisson sampling of Y_t for the Poisson family, c <= 1
// (honest case, no killing): Poisson(lambda t) many jumps, lambda =
// levy_total_mass_poisson(c), jump law Pi_Y({n})/lambda via an inverse-CDF
// table truncated at cumulative mass 1 - 1e-12.
EmpiricalDist sample_y_poisson(double c, double t, std::uint64_t n_samples, std::uint64_t seed,
                               int workers = 1);

}  // namespace kendall
