#pragma once

namespace kendall {

// Principal real branch W0: the solution w >= -1 of w e^w = z, defined for
// z >= -1/e (tolerance-padded at the branch point). Increasing, maps
// [-1/e, inf) onto [-1, inf). Residual contract:
// |W e^W - z| <= 1e-14 * max(1, |z|).
double lambert_w0(double z);

// Lower real branch W_{-1}: the solution w <= -1 of w e^w = z for
// -1/e <= z < 0. Decreasing, maps [-1/e, 0) onto (-inf, -1].
// Residual contract: |W e^W - z| <= 1e-14 * |z|.
double lambert_wm1(double z);

}  // namespace kendall
