#include "posetsat/poset.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"

#include <algorithm>
#include <numeric>

namespace posetsat {

FiniteOrder::FiniteOrder(std::size_t n) : up_(n, Bitset(n)), down_(n, Bitset(n)) {}

FiniteOrder FiniteOrder::from_predicate(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less) {
    FiniteOrder order(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && less(a, b)) {
                order.set_less(a, b);
            }
        }
    }
    return order;
}

void FiniteOrder::set_less(std::size_t a, std::size_t b) {
    up_[a].set(b);
    down_[b].set(a);
}

std::uint64_t FiniteOrder::relation_count() const {
    std::uint64_t total = 0;
    for (const Bitset& b : up_) {
        total += b.count();
    }
    return total;
}

FiniteOrder FiniteOrder::induced(const std::vector<std::size_t>& subset) const {
    FiniteOrder out(subset.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = 0; b < subset.size(); ++b) {
            if (less(subset[a], subset[b])) {
                out.set_less(a, b);
            }
        }
    }
    return out;
}

bool FiniteOrder::is_strict_order() const {
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a) {
        if (up_[a].test(a) || (up_[a] & down_[a]).any()) {
            return false;
        }
        for (std::size_t b = up_[a].find_first(); b != Bitset::npos; b = up_[a].find_next(b)) {
            if (!up_[b].is_subset_of(up_[a])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::uint64_t> FiniteOrder::comparability_masks() const {
    if (size() > 64) {
        throw ResourceLimitError("64-bit masks need at most 64 elements");
    }
    std::vector<std::uint64_t> masks(size(), 0);
    for (std::size_t a = 0; a < size(); ++a) {
        Bitset c = comparable_set(a);
        for (std::size_t b = c.find_first(); b != Bitset::npos; b = c.find_next(b)) {
            masks[a] |= std::uint64_t{1} << b;
        }
    }
    return masks;
}

RankedPoset RankedPoset::build(const FamilySpec& spec, const Limits& limits) {
    validate(spec);
    Integer total = ground_size(spec);
    if (total > Integer(static_cast<unsigned long>(limits.max_elements))) {
        throw ResourceLimitError(describe(spec) + " has " + to_string(total) + " elements, above the limit of " +
                                 std::to_string(limits.max_elements));
    }
    RankedPoset poset;
    poset.spec_ = spec;
    poset.label_ = describe(spec);
    poset.elements_.reserve(total.get_ui());
    for (int i = 0; i <= spec.top_rank(); ++i) {
        poset.level_start_.push_back(poset.elements_.size());
        for_each_in_level(spec, i, [&](const ElementCode& x) { poset.elements_.push_back(x); });
    }
    poset.level_start_.push_back(poset.elements_.size());
    poset.index_elements();
    poset.covers_.resize(poset.size());
    for (std::size_t a = 0; a < poset.size(); ++a) {
        for (const ElementCode& y : posetsat::upper_covers(spec, poset.elements_[a])) {
            poset.covers_[a].push_back(poset.index_of(y));
        }
    }
    return poset;
}

RankedPoset RankedPoset::custom(std::vector<int> ranks, const std::function<bool(std::size_t, std::size_t)>& less,
                                std::string label) {
    const std::size_t n = ranks.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; });
    RankedPoset poset;
    poset.label_ = std::move(label);
    int top = n == 0 ? 0 : *std::max_element(ranks.begin(), ranks.end());
    for (std::size_t a = 0; a < n; ++a) {
        ElementCode x;
        x.rank = ranks[perm[a]];
        // Payload holds the caller's index so the canonical order matches it within a level.
        std::size_t original = perm[a];
        for (int byte = 7; byte >= 0; --byte) {
            x.payload.push_back(static_cast<std::uint8_t>((original >> (8 * byte)) & 0xff));
        }
        poset.elements_.push_back(std::move(x));
    }
    std::size_t pos = 0;
    for (int r = 0; r <= top; ++r) {
        poset.level_start_.push_back(pos);
        while (pos < n && poset.elements_[pos].rank == r) {
            ++pos;
        }
    }
    if (pos != n) {
        throw ValidationError("custom poset ranks must be non-negative");
    }
    poset.level_start_.push_back(n);
    poset.index_elements();
    FiniteOrder order = FiniteOrder::from_predicate(n, [&](std::size_t a, std::size_t b) { return less(perm[a], perm[b]); });
    if (!order.is_strict_order()) {
        throw ValidationError("custom relation is not a strict partial order");
    }
    poset.covers_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        const Bitset& up = order.above(a);
        for (std::size_t b = up.find_first(); b != Bitset::npos; b = up.find_next(b)) {
            if (poset.rank(b) <= poset.rank(a)) {
                throw ValidationError("custom relation is not compatible with the ranks");
            }
            if (poset.rank(b) == poset.rank(a) + 1) {
                poset.covers_[a].push_back(b);
            }
        }
    }
    poset.custom_order_ = std::move(order);
    return poset;
}

void RankedPoset::index_elements() {
    index_.reserve(elements_.size());
    for (std::size_t a = 0; a < elements_.size(); ++a) {
        index_.emplace(elements_[a], a);
    }
}

const FamilySpec& RankedPoset::spec() const {
    if (!spec_) {
        throw ValidationError(label_ + " is not one of the built-in families");
    }
    return *spec_;
}

std::string RankedPoset::label() const {
    return label_;
}

std::optional<std::size_t> RankedPoset::find(const ElementCode& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t RankedPoset::index_of(const ElementCode& x) const {
    auto found = find(x);
    if (!found) {
        throw ValidationError("element does not belong to " + label_);
    }
    return *found;
}

Relation RankedPoset::compare(std::size_t a, std::size_t b) const {
    if (a == b) {
        return Relation::equal;
    }
    if (custom_order_) {
        if (custom_order_->less(a, b)) {
            return Relation::less;
        }
        if (custom_order_->less(b, a)) {
            return Relation::greater;
        }
        return Relation::incomparable;
    }
    if (rank(a) == rank(b)) {
        return Relation::incomparable;
    }
    return posetsat::compare(*spec_, elements_[a], elements_[b]);
}

bool RankedPoset::comparable(std::size_t a, std::size_t b) const {
    Relation r = compare(a, b);
    return r == Relation::less || r == Relation::greater;
}

std::string RankedPoset::encode(std::size_t i) const {
    if (spec_) {
        return posetsat::encode(*spec_, elements_[i]);
    }
    std::size_t original = 0;
    for (std::uint8_t byte : elements_[i].payload) {
        original = (original << 8) | byte;
    }
    return "#" + std::to_string(original);
}

std::size_t RankedPoset::decode(const std::string& text) const {
    if (spec_) {
        return index_of(posetsat::decode(*spec_, text));
    }
    for (std::size_t a = 0; a < size(); ++a) {
        if (encode(a) == text) {
            return a;
        }
    }
    throw ValidationError("element '" + text + "' does not belong to " + label_);
}

FiniteOrder RankedPoset::order(const Limits& limits) const {
    if (custom_order_) {
        return *custom_order_;
    }
    if (size() > limits.max_closure) {
        throw ResourceLimitError(label_ + " has " + std::to_string(size()) +
                                 " elements; the comparability closure is limited to " +
                                 std::to_string(limits.max_closure));
    }
    FiniteOrder out(size());
    std::vector<Bitset> up(size(), Bitset(size()));
    for (std::size_t a = size(); a-- > 0;) {
        for (std::size_t b : covers_[a]) {
            up[a].set(b);
            up[a] |= up[b];
        }
    }
    for (std::size_t a = 0; a < size(); ++a) {
        for (std::size_t b = up[a].find_first(); b != Bitset::npos; b = up[a].find_next(b)) {
            out.set_less(a, b);
        }
    }
    return out;
}

}  // namespace posetsat
