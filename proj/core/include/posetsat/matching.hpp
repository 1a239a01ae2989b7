#pragma once

#include "posetsat/poset.hpp"

#include <cstddef>
#include <vector>

namespace posetsat {

struct AntichainWitness {
    std::size_t size = 0;
    std::vector<std::size_t> members;
};

// Hopcroft-Karp on a bipartite graph with adjacency lists from the left side.
// match_left[u] is the matched right vertex or -1. Returns the matching size.
std::size_t maximum_bipartite_matching(std::size_t right_size, const std::vector<std::vector<std::size_t>>& adjacency,
                                       std::vector<long>& match_left);

// Largest antichain of a finite order via |P| minus a maximum matching in the
// split graph x -> y for x < y; the witness comes from a minimum vertex cover.
AntichainWitness max_antichain(const FiniteOrder& order);

// Width of a ranked poset with a witness (poset indices).
AntichainWitness width(const RankedPoset& poset, const Limits& limits = {});

// Largest antichain inside the given elements (poset indices in and out).
AntichainWitness max_antichain_in(const RankedPoset& poset, const std::vector<std::size_t>& subset,
                                  const Limits& limits = {});

// Exhaustive maximum independent set of the comparability graph; at most 64
// elements. Used to cross-check the matching route.
std::size_t max_antichain_exhaustive(const FiniteOrder& order);

}  // namespace posetsat
