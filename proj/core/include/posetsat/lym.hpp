#pragma once

#include "posetsat/poset.hpp"
#include "posetsat/report.hpp"

#include <vector>

namespace posetsat {

// Sum over levels of |A cap L_i| / |L_i| for an antichain A; the report fails
// when the sum exceeds 1 or A is not an antichain. details.lym_sum holds the sum.
CheckReport check_lym(const RankedPoset& poset, const std::vector<std::size_t>& antichain);

// For every level i < N and every non-empty T in L_i, checks
// |upper shadow of T in L_{i+1}| / |L_{i+1}| >= |T| / |L_i|. Throws
// ResourceLimitError when a level exceeds limits.max_matching_level.
CheckReport check_normalised_matching(const RankedPoset& poset, const Limits& limits = {});

}  // namespace posetsat
