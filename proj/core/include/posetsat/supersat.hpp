#pragma once

#include "posetsat/chain.hpp"
#include "posetsat/digraph.hpp"
#include "posetsat/exact.hpp"
#include "posetsat/poset.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posetsat {

// A subset of a poset (sorted poset indices) with its comparable-pair count.
struct SubsetWitness {
    std::vector<std::size_t> members;
    Integer comp = 0;

    // {"poset": spec, "members": [codes], "comp": int}
    nlohmann::json to_json(const RankedPoset& poset) const;
};

// Number of unordered comparable pairs among the given elements.
Integer comp(const RankedPoset& poset, const std::vector<std::size_t>& members);
SubsetWitness make_witness(const RankedPoset& poset, std::vector<std::size_t> members);

// Ingredients of the random-chain counting bound: the largest conditional
// probability along an arc and the smallest element probability.
struct RandomCountBound {
    Rational max_conditional = 0;
    Rational min_probability = 0;
    std::size_t arc_count = 0;

    // max(0, (m - 1/min_probability) / max_conditional); 0 without arcs.
    Rational bound(const Integer& m) const;
};

// Throws ValidationError when some element has probability zero.
RandomCountBound random_count_parameters(const RankedPoset& poset, const ComparabilityDigraph& digraph,
                                         const ChainDistribution& dist);
Rational random_chain_lower_bound(const RankedPoset& poset, const ComparabilityDigraph& digraph,
                                  const ChainDistribution& dist, const Integer& m);

enum class Theorem { boolean_lattice, vector_space, multiset };

std::string theorem_name(Theorem t);
Theorem parse_theorem(const std::string& name);

// Level-sum threshold and per-excess rate of the supersaturation theorems;
// the bound is rate * max(0, m - threshold) and only holds for n large
// relative to k, which the caveat records.
struct BoundResult {
    Theorem theorem = Theorem::boolean_lattice;
    int n = 0;
    int k = 1;
    int q = 0;
    Integer threshold = 0;
    Rational rate = 0;
    std::string caveat;

    Rational bound(const Integer& m) const;
    nlohmann::json to_json() const;
};

BoundResult theorem_bound(Theorem theorem, int n, int k, int q = 0);

struct MinCompResult {
    Integer min = 0;
    SubsetWitness witness;
    bool exhaustive = false;
    std::uint64_t nodes = 0;
};

// Exact minimum of comp over all m-subsets: plain enumeration when there are
// at most limits.max_subsets of them, otherwise branch and bound (at most
// limits.max_branch_elements elements).
MinCompResult brute_min_comp(const RankedPoset& poset, long m, const Limits& limits = {});

// Minimum comp for every m = 0..|P| in one Gray-code pass over all subsets.
// Needs 2^|P| <= limits.max_subsets.
std::vector<MinCompResult> min_comp_profile(const RankedPoset& poset, const Limits& limits = {});

// Some m-subset with comp < bound, if any; exact search.
std::optional<SubsetWitness> find_subset_below(const RankedPoset& poset, long m, const Integer& bound,
                                               const Limits& limits = {});

// Whole levels by distance of the rank from N/2 (lower rank first on ties),
// then the next level in canonical order.
SubsetWitness centered_construction(const RankedPoset& poset, long m);

// Subspace family: every ceil(n/2)-dimensional subspace plus the first t of
// dimension floor((n-1)/2). {0,1,2}^n: level n plus t elements of level n+1
// with the fewest non-zero coordinates (canonical order on ties).
SubsetWitness extremal_construction(const RankedPoset& poset, const Integer& t);

struct ConjectureRow {
    long m = 0;
    Integer brute_min = 0;
    Integer centered = 0;
    bool equal = false;
    std::optional<SubsetWitness> better;  // strictly better than centered
};

struct ConjectureReport {
    int n = 0;
    int r = 0;
    std::vector<ConjectureRow> rows;
    bool all_equal() const;
    nlohmann::json to_json(const RankedPoset& poset) const;
};

// Compares the exact minimum with the centered construction for the given m
// (every m when empty).
ConjectureReport explore_conjecture(int n, int r, const std::vector<long>& ms = {}, const Limits& limits = {});

}  // namespace posetsat
