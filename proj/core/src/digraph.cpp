#include "posetsat/digraph.hpp"

#include "posetsat/errors.hpp"

#include <cstdlib>

namespace posetsat {

bool toward_middle_arc(int top_rank, int rank_x, int rank_y, bool x_below_y) {
    int dx = std::abs(2 * rank_x - top_rank);
    int dy = std::abs(2 * rank_y - top_rank);
    return dy < dx || (x_below_y && rank_x == top_rank - rank_y);
}

ComparabilityDigraph::ComparabilityDigraph(const RankedPoset& poset, OrientationRule rule, ArcPredicate custom)
    : poset_(&poset), rule_(rule), custom_(std::move(custom)) {
    if (rule == OrientationRule::custom && !custom_) {
        throw ValidationError("custom orientation needs an arc predicate");
    }
}

bool ComparabilityDigraph::arc(std::size_t x, std::size_t y) const {
    if (rule_ == OrientationRule::custom) {
        return custom_(x, y);
    }
    Relation rel = poset_->compare(x, y);
    if (rel != Relation::less && rel != Relation::greater) {
        return false;
    }
    return toward_middle_arc(poset_->top_rank(), poset_->rank(x), poset_->rank(y), rel == Relation::less);
}

std::vector<std::pair<std::size_t, std::size_t>> ComparabilityDigraph::arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < poset_->size(); ++x) {
        for (std::size_t y = 0; y < poset_->size(); ++y) {
            if (x != y && poset_->comparable(x, y) && arc(x, y)) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

CheckReport ComparabilityDigraph::audit() const {
    CheckReport report;
    report.check = "digraph_orientation";
    report.n = poset_->is_family() ? poset_->spec().n : 0;
    std::size_t arcs_seen = 0;
    for (std::size_t x = 0; x < poset_->size(); ++x) {
        for (std::size_t y = x + 1; y < poset_->size(); ++y) {
            bool forward = arc(x, y);
            bool backward = arc(y, x);
            arcs_seen += forward + backward;
            bool comp = poset_->comparable(x, y);
            if (comp && forward == backward) {
                report.violations.push_back((forward ? "both arcs between " : "no arc between ") +
                                            poset_->encode(x) + " and " + poset_->encode(y));
            }
            if (!comp && (forward || backward)) {
                report.violations.push_back("arc between incomparable " + poset_->encode(x) + " and " +
                                            poset_->encode(y));
            }
        }
    }
    report.details["arcs"] = arcs_seen;
    return report;
}

ComparabilityDigraph build_digraph(const RankedPoset& poset, OrientationRule rule,
                                   ComparabilityDigraph::ArcPredicate custom) {
    ComparabilityDigraph digraph(poset, rule, std::move(custom));
    if (rule == OrientationRule::custom) {
        CheckReport audit = digraph.audit();
        if (!audit.passed()) {
            throw ValidationError("custom orientation is not a comparability digraph: " + audit.violations.front());
        }
    }
    return digraph;
}

}  // namespace posetsat
