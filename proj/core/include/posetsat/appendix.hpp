#pragma once

#include "posetsat/exact.hpp"
#include "posetsat/report.hpp"

namespace posetsat {

// a_{i-1} a_{i+1} <= a_i^2 for the level sizes of {0..r}^n.
CheckReport check_log_concavity(long n, long r = 2);

// Two-sided bounds on consecutive level ratios of {0,1,2}^n below the middle
// (1 <= i <= n-3, i = n-2, i = n-1), plus the monotonicity of the averaged
// down-degree f(s) that drives them. Requires n >= 5.
CheckReport check_ratio_bounds(long n);

// Average weight an element of slice s of level i receives when every
// element of level i+1 spreads weight 1 evenly over its lower covers.
Rational spread_weight(long n, long i, long s);

// log_q(number of subspaces of F_q^n) / n^2, for display.
double subspace_growth_exponent(long n, long q);

}  // namespace posetsat
