#include "posetsat/supersat.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace posetsat {

nlohmann::json SubsetWitness::to_json(const RankedPoset& poset) const {
    nlohmann::json j;
    j["poset"] = poset.is_family() ? posetsat::to_json(poset.spec()) : nlohmann::json(poset.label());
    std::vector<std::string> codes;
    for (std::size_t x : members) {
        codes.push_back(poset.encode(x));
    }
    j["members"] = codes;
    j["comp"] = to_string(comp);
    return j;
}

Integer comp(const RankedPoset& poset, const std::vector<std::size_t>& members) {
    unsigned long count = 0;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (members[a] == members[b]) {
                throw ValidationError("subset lists " + poset.encode(members[a]) + " twice");
            }
            count += poset.comparable(members[a], members[b]);
        }
    }
    return Integer(count);
}

SubsetWitness make_witness(const RankedPoset& poset, std::vector<std::size_t> members) {
    std::sort(members.begin(), members.end());
    SubsetWitness w;
    w.comp = comp(poset, members);
    w.members = std::move(members);
    return w;
}

// ---------------------------------------------------------------------------

Rational RandomCountBound::bound(const Integer& m) const {
    if (arc_count == 0 || max_conditional == 0) {
        return 0;
    }
    Rational value = (Rational(m) - 1 / min_probability) / max_conditional;
    return value > 0 ? value : Rational(0);
}

RandomCountBound random_count_parameters(const RankedPoset& poset, const ComparabilityDigraph& digraph,
                                         const ChainDistribution& dist) {
    RandomCountBound out;
    bool first = true;
    for (std::size_t x = 0; x < poset.size(); ++x) {
        Rational p = dist.element_probability(poset.element(x));
        if (p <= 0) {
            throw ValidationError("the chain distribution misses " + poset.encode(x));
        }
        if (first || p < out.min_probability) {
            out.min_probability = p;
            first = false;
        }
    }
    for (const auto& [x, y] : digraph.arcs()) {
        ++out.arc_count;
        Rational p = dist.conditional(poset.element(x), poset.element(y));
        if (p > out.max_conditional) {
            out.max_conditional = p;
        }
    }
    return out;
}

Rational random_chain_lower_bound(const RankedPoset& poset, const ComparabilityDigraph& digraph,
                                  const ChainDistribution& dist, const Integer& m) {
    return random_count_parameters(poset, digraph, dist).bound(m);
}

// ---------------------------------------------------------------------------

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::boolean_lattice: return "boolean";
        case Theorem::vector_space: return "subspace";
        case Theorem::multiset: return "multiset";
    }
    return "?";
}

Theorem parse_theorem(const std::string& name) {
    if (name == "boolean") {
        return Theorem::boolean_lattice;
    }
    if (name == "subspace") {
        return Theorem::vector_space;
    }
    if (name == "multiset" || name == "rpower") {
        return Theorem::multiset;
    }
    throw ValidationError("unknown theorem '" + name + "' (expected boolean, subspace or multiset)");
}

Rational BoundResult::bound(const Integer& m) const {
    if (m <= threshold) {
        return 0;
    }
    return rate * Rational(m - threshold);
}

nlohmann::json BoundResult::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem_name(theorem);
    j["n"] = n;
    j["k"] = k;
    if (theorem == Theorem::vector_space) {
        j["q"] = q;
    }
    j["threshold"] = to_string(threshold);
    j["rate"] = fraction_string(rate);
    j["caveat"] = caveat;
    return j;
}

BoundResult theorem_bound(Theorem theorem, int n, int k, int q) {
    if (k < 1) {
        throw ValidationError("k must be at least 1");
    }
    if (k > n) {
        throw ValidationError("k must be at most n");
    }
    BoundResult out;
    out.theorem = theorem;
    out.n = n;
    out.k = k;
    out.caveat = "holds for n >= n_0(k); n_0(k) is not explicit";
    auto ceil_half = [](long v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); };
    switch (theorem) {
        case Theorem::boolean_lattice:
        case Theorem::vector_space: {
            bool sub = theorem == Theorem::vector_space;
            if (sub) {
                if (!is_prime_power(q)) {
                    throw ValidationError("q must be a prime power");
                }
                out.q = q;
            } else if (q != 0) {
                throw ValidationError("the boolean bound takes no q");
            }
            auto level = [&](long i) { return sub ? gaussian_binomial(n, i, q) : binomial(n, i); };
            for (int r = 0; r < k; ++r) {
                out.threshold += level(ceil_half(n - k + 1 + 2 * r));
            }
            long top = ceil_half(n + k);
            out.rate = sub ? Rational(gaussian_binomial(top, k, q)) : Rational(binomial(top, k));
            break;
        }
        case Theorem::multiset: {
            if (3 * k - 1 > 2 * n) {
                throw ValidationError("the multiset bound needs 3k - 1 <= 2n");
            }
            if (q != 0) {
                throw ValidationError("the multiset bound takes no q");
            }
            long lo = n - (k - 1) / 2;
            long hi = n + ceil_half(k - 1);
            for (long r = lo; r <= hi; ++r) {
                out.threshold += multiset_level(n, r);
            }
            out.rate = make_rational(multiset_level(n, 3 * k - 1), multiset_level(n, 2 * k - 1)) - 1;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t low_mask(std::size_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

long mask_comp(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    long twice = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        twice += std::popcount(adj[std::countr_zero(rest)] & mask);
    }
    return twice / 2;
}

std::vector<std::size_t> mask_members(std::uint64_t mask, const std::vector<std::size_t>& label) {
    std::vector<std::size_t> out;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        out.push_back(label[std::countr_zero(rest)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minimum number of edges among r vertices of a graph whose independence
// number is at most alpha: alpha near-equal cliques.
long clique_partition_edges(long r, long alpha) {
    if (alpha <= 0) {
        return 0;
    }
    long a = r / alpha;
    long b = r % alpha;
    return b * (a + 1) * a / 2 + (alpha - b) * a * (a - 1) / 2;
}

// Branch and bound over m-subsets in ascending-degree order.
class SubsetSearch {
public:
    SubsetSearch(const RankedPoset& poset, const FiniteOrder& order) : n_(order.size()) {
        std::vector<std::uint64_t> base = order.comparability_masks();
        label_.resize(n_);
        std::iota(label_.begin(), label_.end(), 0);
        std::stable_sort(label_.begin(), label_.end(), [&](std::size_t a, std::size_t b) {
            return std::popcount(base[a]) < std::popcount(base[b]);
        });
        std::vector<std::size_t> position(n_);
        for (std::size_t p = 0; p < n_; ++p) {
            position[label_[p]] = p;
        }
        adj_.assign(n_, 0);
        for (std::size_t p = 0; p < n_; ++p) {
            for (std::uint64_t rest = base[label_[p]]; rest != 0; rest &= rest - 1) {
                adj_[p] |= std::uint64_t{1} << position[std::countr_zero(rest)];
            }
        }
        alpha_ = static_cast<long>(max_antichain(order).size);
        (void)poset;
    }

    std::uint64_t to_positions(const std::vector<std::size_t>& members) const {
        std::uint64_t mask = 0;
        for (std::size_t x : members) {
            auto it = std::find(label_.begin(), label_.end(), x);
            mask |= std::uint64_t{1} << (it - label_.begin());
        }
        return mask;
    }

    const std::vector<std::size_t>& label() const { return label_; }
    const std::vector<std::uint64_t>& adjacency() const { return adj_; }

    // Looks for m-subsets with comp strictly below best; updates best and
    // best_mask. With stop_on_first the search ends at the first hit.
    bool run(long m, long& best, std::uint64_t& best_mask, bool stop_on_first) {
        m_ = m;
        best_ = best;
        found_ = false;
        stop_ = stop_on_first;
        search(0, 0, 0, 0);
        if (found_) {
            best = best_;
            best_mask = best_mask_;
        }
        return found_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void search(std::size_t pos, std::uint64_t chosen, long count, long cost) {
        ++nodes_;
        if (count == m_) {
            if (cost < best_) {
                best_ = cost;
                best_mask_ = chosen;
                found_ = true;
            }
            return;
        }
        const long r = m_ - count;
        const std::uint64_t rest = low_mask(n_) & ~low_mask(pos);
        const long available = std::popcount(rest);
        if (available < r) {
            return;
        }
        long cheap[64];
        long paired[64];
        std::size_t k = 0;
        for (std::uint64_t it = rest; it != 0; it &= it - 1) {
            int v = std::countr_zero(it);
            long c = std::popcount(adj_[v] & chosen);
            long inside = std::popcount(adj_[v] & rest);
            cheap[k] = c;
            paired[k] = 2 * c + std::max(0L, r - available + inside);
            ++k;
        }
        std::nth_element(cheap, cheap + (r - 1), cheap + k);
        std::nth_element(paired, paired + (r - 1), paired + k);
        long sum_cheap = 0;
        long sum_paired = 0;
        for (long t = 0; t < r; ++t) {
            sum_cheap += cheap[t];
            sum_paired += paired[t];
        }
        long bound = cost + std::max((sum_paired + 1) / 2, sum_cheap + clique_partition_edges(r, alpha_));
        if (bound >= best_) {
            return;
        }
        const std::uint64_t bit = std::uint64_t{1} << pos;
        search(pos + 1, chosen | bit, count + 1, cost + std::popcount(adj_[pos] & chosen));
        if (found_ && stop_) {
            return;
        }
        search(pos + 1, chosen, count, cost);
    }

    std::size_t n_;
    std::vector<std::size_t> label_;
    std::vector<std::uint64_t> adj_;
    long alpha_ = 0;
    long m_ = 0;
    long best_ = 0;
    std::uint64_t best_mask_ = 0;
    bool found_ = false;
    bool stop_ = false;
    std::uint64_t nodes_ = 0;
};

bool fits_exhaustive(std::size_t n, long m, const Limits& limits) {
    return n <= 63 && binomial(static_cast<long>(n), m) <= Integer(static_cast<unsigned long>(limits.max_subsets));
}

// Visits every m-subset of n bits (Gosper's hack).
template <class F>
void for_each_combination(std::size_t n, long m, F&& fn) {
    if (m == 0) {
        fn(std::uint64_t{0});
        return;
    }
    std::uint64_t mask = low_mask(static_cast<std::size_t>(m));
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (mask < limit) {
        fn(mask);
        std::uint64_t c = mask & (~mask + 1);
        std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

void check_size(const RankedPoset& poset, long m) {
    if (m < 0 || static_cast<std::size_t>(m) > poset.size()) {
        throw ValidationError("m must lie in [0, " + std::to_string(poset.size()) + "]");
    }
}

}  // namespace

MinCompResult brute_min_comp(const RankedPoset& poset, long m, const Limits& limits) {
    check_size(poset, m);
    const std::size_t n = poset.size();
    MinCompResult out;
    if (fits_exhaustive(n, m, limits)) {
        FiniteOrder order = poset.order(limits);
        std::vector<std::uint64_t> adj = order.comparability_masks();
        long best = -1;
        std::uint64_t best_mask = 0;
        for_each_combination(n, m, [&](std::uint64_t mask) {
            ++out.nodes;
            long c = mask_comp(adj, mask);
            if (best < 0 || c < best) {
                best = c;
                best_mask = mask;
            }
        });
        std::vector<std::size_t> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        out.witness = make_witness(poset, mask_members(best_mask, identity));
        out.min = out.witness.comp;
        out.exhaustive = true;
        return out;
    }
    if (n > limits.max_branch_elements || n > 64) {
        throw ResourceLimitError(poset.label() + " has " + std::to_string(n) +
                                 " elements; exact minimisation is limited to " +
                                 std::to_string(std::min<std::size_t>(limits.max_branch_elements, 64)));
    }
    FiniteOrder order = poset.order(limits);
    SubsetSearch search(poset, order);
    SubsetWitness start = centered_construction(poset, m);
    long best = static_cast<long>(start.comp.get_si());
    std::uint64_t best_mask = search.to_positions(start.members);
    search.run(m, best, best_mask, false);
    out.witness = make_witness(poset, mask_members(best_mask, search.label()));
    out.min = out.witness.comp;
    out.nodes = search.nodes();
    return out;
}

std::vector<MinCompResult> min_comp_profile(const RankedPoset& poset, const Limits& limits) {
    const std::size_t n = poset.size();
    if (n > 40 || (std::uint64_t{1} << n) > limits.max_subsets) {
        throw ResourceLimitError("all-subset sweep of " + poset.label() + " exceeds the subset limit");
    }
    FiniteOrder order = poset.order(limits);
    std::vector<std::uint64_t> adj = order.comparability_masks();
    std::vector<long> best(n + 1, -1);
    std::vector<std::uint64_t> best_mask(n + 1, 0);
    std::uint64_t mask = 0;
    long cost = 0;
    best[0] = 0;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int bit = std::countr_zero(i);
        std::uint64_t b = std::uint64_t{1} << bit;
        if (mask & b) {
            mask ^= b;
            cost -= std::popcount(adj[bit] & mask);
        } else {
            cost += std::popcount(adj[bit] & mask);
            mask ^= b;
        }
        int size = std::popcount(mask);
        if (best[size] < 0 || cost < best[size]) {
            best[size] = cost;
            best_mask[size] = mask;
        }
    }
    std::vector<std::size_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<MinCompResult> out(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        out[m].witness = make_witness(poset, mask_members(best_mask[m], identity));
        out[m].min = out[m].witness.comp;
        out[m].exhaustive = true;
        out[m].nodes = total;
    }
    return out;
}

std::optional<SubsetWitness> find_subset_below(const RankedPoset& poset, long m, const Integer& bound,
                                               const Limits& limits) {
    check_size(poset, m);
    const std::size_t n = poset.size();
    if (bound <= 0) {
        return std::nullopt;
    }
    SubsetWitness start = centered_construction(poset, m);
    if (start.comp < bound) {
        return start;
    }
    if (fits_exhaustive(n, m, limits)) {
        FiniteOrder order = poset.order(limits);
        std::vector<std::uint64_t> adj = order.comparability_masks();
        const long limit = bound.fits_slong_p() ? bound.get_si() : std::numeric_limits<long>::max();
        std::optional<std::uint64_t> hit;
        for_each_combination(n, m, [&](std::uint64_t mask) {
            if (!hit && mask_comp(adj, mask) < limit) {
                hit = mask;
            }
        });
        if (!hit) {
            return std::nullopt;
        }
        std::vector<std::size_t> identity(n);
        std::iota(identity.begin(), identity.end(), 0);
        return make_witness(poset, mask_members(*hit, identity));
    }
    if (n > limits.max_branch_elements || n > 64) {
        throw ResourceLimitError(poset.label() + " is too large for an exact subset search");
    }
    FiniteOrder order = poset.order(limits);
    SubsetSearch search(poset, order);
    long best = bound.fits_slong_p() ? bound.get_si() : std::numeric_limits<long>::max();
    std::uint64_t best_mask = 0;
    if (!search.run(m, best, best_mask, true)) {
        return std::nullopt;
    }
    return make_witness(poset, mask_members(best_mask, search.label()));
}

SubsetWitness centered_construction(const RankedPoset& poset, long m) {
    check_size(poset, m);
    const int top = poset.top_rank();
    std::vector<int> levels(top + 1);
    std::iota(levels.begin(), levels.end(), 0);
    std::stable_sort(levels.begin(), levels.end(),
                     [&](int a, int b) { return std::abs(2 * a - top) < std::abs(2 * b - top); });
    std::vector<std::size_t> members;
    for (int level : levels) {
        for (std::size_t x = poset.level_begin(level); x < poset.level_end(level); ++x) {
            if (static_cast<long>(members.size()) == m) {
                break;
            }
            members.push_back(x);
        }
    }
    return make_witness(poset, std::move(members));
}

SubsetWitness extremal_construction(const RankedPoset& poset, const Integer& t) {
    if (!poset.is_family()) {
        throw ValidationError("extremal constructions are defined for subspace and {0,1,2}^n posets");
    }
    const FamilySpec& spec = poset.spec();
    std::vector<std::size_t> members;
    std::vector<std::size_t> candidates;
    int base_level = 0;
    if (spec.family == Family::subspace) {
        base_level = (spec.n + 1) / 2;
        int extra = (spec.n - 1) / 2;
        if (spec.n < 1) {
            throw ValidationError("subspace construction needs n >= 1");
        }
        for (std::size_t x = poset.level_begin(extra); x < poset.level_end(extra); ++x) {
            candidates.push_back(x);
        }
    } else if (spec.family == Family::rpower && spec.r == 2) {
        base_level = spec.n;
        int extra = spec.n + 1;
        if (extra <= poset.top_rank()) {
            for (std::size_t x = poset.level_begin(extra); x < poset.level_end(extra); ++x) {
                candidates.push_back(x);
            }
        }
        auto nonzero = [&](std::size_t x) {
            const auto& p = poset.element(x).payload;
            return std::count_if(p.begin(), p.end(), [](std::uint8_t d) { return d != 0; });
        };
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](std::size_t a, std::size_t b) { return nonzero(a) < nonzero(b); });
    } else {
        throw ValidationError("extremal constructions are defined for subspace and {0,1,2}^n posets");
    }
    if (t < 0 || t > Integer(static_cast<unsigned long>(candidates.size()))) {
        throw ValidationError("t must lie in [0, " + std::to_string(candidates.size()) + "]");
    }
    for (std::size_t x = poset.level_begin(base_level); x < poset.level_end(base_level); ++x) {
        members.push_back(x);
    }
    members.insert(members.end(), candidates.begin(), candidates.begin() + t.get_si());
    return make_witness(poset, std::move(members));
}

// ---------------------------------------------------------------------------

bool ConjectureReport::all_equal() const {
    return std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& row) { return row.equal; });
}

nlohmann::json ConjectureReport::to_json(const RankedPoset& poset) const {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["all_equal"] = all_equal();
    nlohmann::json table = nlohmann::json::array();
    for (const ConjectureRow& row : rows) {
        nlohmann::json entry;
        entry["m"] = row.m;
        entry["brute_min"] = to_string(row.brute_min);
        entry["centered"] = to_string(row.centered);
        entry["equal"] = row.equal;
        if (row.better) {
            entry["counterexample"] = row.better->to_json(poset);
        }
        table.push_back(entry);
    }
    j["rows"] = table;
    return j;
}

ConjectureReport explore_conjecture(int n, int r, const std::vector<long>& ms, const Limits& limits) {
    RankedPoset poset = RankedPoset::build(FamilySpec::grid(n, r), limits);
    ConjectureReport report;
    report.n = n;
    report.r = r;
    std::vector<long> sizes = ms;
    if (sizes.empty()) {
        for (long m = 1; m <= static_cast<long>(poset.size()); ++m) {
            sizes.push_back(m);
        }
    }
    std::vector<MinCompResult> profile;
    if (poset.size() <= 40 && (std::uint64_t{1} << poset.size()) <= limits.max_subsets) {
        profile = min_comp_profile(poset, limits);
    }
    for (long m : sizes) {
        check_size(poset, m);
        ConjectureRow row;
        row.m = m;
        MinCompResult best = profile.empty() ? brute_min_comp(poset, m, limits) : profile[m];
        row.brute_min = best.min;
        row.centered = centered_construction(poset, m).comp;
        row.equal = row.brute_min == row.centered;
        if (!row.equal) {
            row.better = best.witness;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace posetsat
