#pragma once

#include "posetsat/element.hpp"
#include "posetsat/exact.hpp"
#include "posetsat/family.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace posetsat {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Resource ceilings shared by every enumeration-backed operation.
struct Limits {
    std::size_t max_elements = 10'000'000;
    std::size_t max_closure = 50'000;
    std::uint64_t max_subsets = std::uint64_t{1} << 24;
    std::size_t max_branch_elements = 40;
    std::size_t max_matching_level = 22;
};

// A finite strict order stored as up-sets and down-sets.
class FiniteOrder {
public:
    FiniteOrder() = default;
    explicit FiniteOrder(std::size_t n);

    static FiniteOrder from_predicate(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& less);

    // Records a < b; the caller is responsible for transitivity.
    void set_less(std::size_t a, std::size_t b);

    std::size_t size() const { return up_.size(); }
    bool less(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool comparable(std::size_t a, std::size_t b) const { return up_[a].test(b) || up_[b].test(a); }
    const Bitset& above(std::size_t a) const { return up_[a]; }
    const Bitset& below(std::size_t a) const { return down_[a]; }
    Bitset comparable_set(std::size_t a) const { return up_[a] | down_[a]; }
    std::size_t degree(std::size_t a) const { return up_[a].count() + down_[a].count(); }

    // Number of comparable pairs a < b.
    std::uint64_t relation_count() const;

    FiniteOrder induced(const std::vector<std::size_t>& subset) const;

    // Irreflexive, antisymmetric and transitive.
    bool is_strict_order() const;

    // Comparability neighbourhoods as 64-bit masks; requires size() <= 64.
    std::vector<std::uint64_t> comparability_masks() const;

private:
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
};

// A ranked poset with all elements materialized in canonical order.
class RankedPoset {
public:
    static RankedPoset build(const FamilySpec& spec, const Limits& limits = {});

    // Graded poset described by ranks and a strict order; used for small
    // hand-made examples such as chains and antichains.
    static RankedPoset custom(std::vector<int> ranks, const std::function<bool(std::size_t, std::size_t)>& less,
                              std::string label);

    bool is_family() const { return spec_.has_value(); }
    const FamilySpec& spec() const;
    std::string label() const;

    int top_rank() const { return static_cast<int>(level_start_.size()) - 2; }
    std::size_t size() const { return elements_.size(); }
    const ElementCode& element(std::size_t i) const { return elements_[i]; }
    int rank(std::size_t i) const { return elements_[i].rank; }
    std::size_t level_begin(int r) const { return level_start_[r]; }
    std::size_t level_end(int r) const { return level_start_[r + 1]; }
    std::size_t level_count(int r) const { return level_start_[r + 1] - level_start_[r]; }

    std::optional<std::size_t> find(const ElementCode& x) const;
    std::size_t index_of(const ElementCode& x) const;

    Relation compare(std::size_t a, std::size_t b) const;
    bool less(std::size_t a, std::size_t b) const { return compare(a, b) == Relation::less; }
    bool comparable(std::size_t a, std::size_t b) const;

    std::string encode(std::size_t i) const;
    std::size_t decode(const std::string& text) const;

    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return covers_[i]; }

    // Transitive closure; throws ResourceLimitError above limits.max_closure.
    FiniteOrder order(const Limits& limits = {}) const;

private:
    RankedPoset() = default;
    void index_elements();

    std::optional<FamilySpec> spec_;
    std::string label_;
    std::vector<ElementCode> elements_;
    std::vector<std::size_t> level_start_;
    std::vector<std::vector<std::size_t>> covers_;
    std::unordered_map<ElementCode, std::size_t, ElementCodeHash> index_;
    std::optional<FiniteOrder> custom_order_;
};

}  // namespace posetsat
