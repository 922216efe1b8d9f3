#pragma once

#include "kendall/series.hpp"

namespace kendall {

// Density g(x; alpha) of the strictly stable variable U normalized by
//   E[exp(-z U)] = exp(-z^alpha)   for alpha in (0,1), supported on x > 0,
//   E[exp( z U)] = exp( z^alpha)   for alpha in (1,2], supported on all of R
// (spectrally negative; heavy left tail, superexponential right tail).
//
// Evaluation routes, tried in order of expected accuracy for the point:
//   * the convergent power series in x^{-n alpha - 1} (alpha < 1) or x^{n-1}
//     (alpha > 1), with the shared truncation/cancellation contract;
//   * for alpha < 1 at small x, where the direct series cancels beyond the
//     cap, the dual series at x^{-alpha} through x g(x;a) =
//     x^{-a} g(x^{-a}; 1/a);
//   * for alpha > 1 at large negative x, the asymptotic left-tail expansion
//     (optimally truncated, first omitted term folded into abs_err);
//   * a Fourier-cosine integral of the characteristic function for the
//     mid-range where series cancellation is too great but the density is
//     not yet negligible;
//   * a saddle-point bound in the far superexponential tails, where the
//     density is below any tolerance used downstream (generous abs_err).
//
// The returned abs_err is an honest estimate for the selected route. Throws
// precision_loss_error only when every route fails to produce a value with
// abs_err <= max(1e-12, 1e-6 |value|).
SeriesValue stable_g(double x, double alpha);

}  // namespace kendall
