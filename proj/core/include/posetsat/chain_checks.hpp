#pragma once

#include "posetsat/exact.hpp"
#include "posetsat/poset.hpp"
#include "posetsat/report.hpp"

#include <optional>

namespace posetsat {

// Non-negativity, flow conservation (i-2s) w + (n-i+s) w' = 1/|L_i|, the two
// reflection identities about level n, boundary zeros and the incoming
// identity t w(i,t-1) + (i+1-2t) w'(i,t) = 1/|L_{i+1}|.
CheckReport verify_weight_identities(int n);

// Every slice probability of mu equals 1/|L_i|.
CheckReport verify_level_uniformity(int n);

// Forward recursion over every element of {0,1,2}^n with the weight-table
// transitions: each element of level i is hit with probability 1/|L_i|.
CheckReport verify_element_uniformity(int n, const Limits& limits = {});

// (a) w' < w below the middle (n >= 2); (b) w <= 2/((i+1)|L_{i+1}|) below the
// middle and (c) the one-step transition bound on every level (n >= 5);
// (d) the reflection identities. Clauses outside their range are noted.
CheckReport verify_weight_inequalities(int n);

// Threshold (l_{3k-1}(n)/l_{2k-1}(n) - 1)^{-1}; empty when it is not positive
// or 3k-1 > 2n.
std::optional<Rational> conditional_threshold(int n, int k);

// Exact P(y | x) under mu for every comparable pair whose levels (i for the
// conditioning element, j for the target) satisfy |i-j| >= k, min >= 2k or
// max <= 2n-2k, and |j-n| <= |i-n|, compared against conditional_threshold.
// max_ratio is the largest P / threshold.
CheckReport verify_conditional_bound(int n, int k);

// (2c)^c (1 - c/2) / (e^{c/2} (1 - c/2)^{c/2}): the per-n decay factor of the
// far-apart case of the conditional bound. Display only.
double conditional_decay_factor(double c);

// Largest decay factor on a grid of c in (1/10, 11/10].
double max_conditional_decay_factor(int grid = 1000);

}  // namespace posetsat
