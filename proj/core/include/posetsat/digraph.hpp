#pragma once

#include "posetsat/poset.hpp"
#include "posetsat/report.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace posetsat {

enum class OrientationRule { toward_middle_with_complement_arcs, custom };

// Arc (x, y) under the default rule: rank(y) is strictly closer to N/2 than
// rank(x), or x < y and rank(x) = N - rank(y).
bool toward_middle_arc(int top_rank, int rank_x, int rank_y, bool x_below_y);

// An orientation of the comparability graph of a poset. The poset must
// outlive the digraph.
class ComparabilityDigraph {
public:
    using ArcPredicate = std::function<bool(std::size_t, std::size_t)>;

    ComparabilityDigraph(const RankedPoset& poset, OrientationRule rule, ArcPredicate custom = {});

    const RankedPoset& poset() const { return *poset_; }
    OrientationRule rule() const { return rule_; }

    // True when (x, y) is an arc; false for incomparable pairs.
    bool arc(std::size_t x, std::size_t y) const;
    std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

    // Exactly one arc per comparable pair, none between incomparable ones.
    CheckReport audit() const;

private:
    const RankedPoset* poset_;
    OrientationRule rule_;
    ArcPredicate custom_;
};

// Builds the digraph and audits it; a custom rule that fails the audit is
// rejected with ValidationError.
ComparabilityDigraph build_digraph(const RankedPoset& poset, OrientationRule rule,
                                   ComparabilityDigraph::ArcPredicate custom = {});

}  // namespace posetsat
