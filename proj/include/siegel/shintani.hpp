#pragma once

#include "siegel/rational.hpp"

namespace siegel {

/// Exact special value zeta_Shin(L_r^*, r - n) of the Shintani zeta
/// function for rank-r half-integral symmetric matrices, 0 <= r <= n.
/// Throws OutOfRangeError if r > n or n < 1.
Rational shintani_special(int r, int n);

/// Level specialization factor 2^{r - r^2 + rn} * N^{r(r-1)/2 - rn}.
Rational level_scale(int r, int n, long N);

}  // namespace siegel
