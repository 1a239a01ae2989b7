#include "posetsat/chain.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace posetsat {

namespace {

const Rational& zero_rational() {
    static const Rational zero = 0;
    return zero;
}

// Index of the single coordinate where y exceeds x by one, or -1.
int raised_coordinate(const ElementCode& x, const ElementCode& y) {
    if (x.payload.size() != y.payload.size() || y.rank != x.rank + 1) {
        return -1;
    }
    int found = -1;
    for (std::size_t c = 0; c < x.payload.size(); ++c) {
        if (x.payload[c] == y.payload[c]) {
            continue;
        }
        if (y.payload[c] != x.payload[c] + 1 || found >= 0) {
            return -1;
        }
        found = static_cast<int>(c);
    }
    return found;
}

}  // namespace

Rational ChainDistribution::transition(const ElementCode& x, const ElementCode& y) const {
    for (const Step& step : next_steps(x)) {
        if (step.first == y) {
            return step.second;
        }
    }
    if (y.rank != x.rank + 1) {
        throw ValidationError(encode(y) + " does not cover " + encode(x));
    }
    return 0;
}

// ---------------------------------------------------------------------------

MuDistribution::MuDistribution(int n) : n_(n), spec_(FamilySpec::multiset(n)), table_(n) {
    slice_prob_.resize(2 * n + 1);
    slice_prob_[0] = {Rational(1)};
    for (int i = 0; i < 2 * n; ++i) {
        int j = i + 1;
        slice_prob_[j].assign(j / 2 + 1, Rational(0));
        for (int s = std::max(0, j - n); 2 * s <= j; ++s) {
            Rational p = 0;
            if (2 * s <= i) {
                p += Rational(j - 2 * s) * slice_prob_[i][s] * table_.to_same_twos(i, s);
            }
            if (s >= 1) {
                p += Rational(s) * slice_prob_[i][s - 1] * table_.to_more_twos(i, s - 1);
            }
            slice_prob_[j][s] = p;
        }
    }
}

std::string MuDistribution::encode(const ElementCode& x) const {
    return posetsat::encode(spec_, x);
}

std::vector<Step> MuDistribution::start_steps() const {
    return {Step(bottom_element(spec_), Rational(1))};
}

std::vector<Step> MuDistribution::next_steps(const ElementCode& x) const {
    check_element(spec_, x);
    std::vector<Step> out;
    if (x.rank >= 2 * n_) {
        return out;
    }
    const int s = count_twos(x);
    const Rational same = table_.to_same_twos(x.rank, s);
    const Rational more = table_.to_more_twos(x.rank, s);
    for (const ElementCode& y : upper_covers(spec_, x)) {
        const Rational& p = count_twos(y) > s ? more : same;
        if (p != 0) {
            out.emplace_back(y, p);
        }
    }
    return out;
}

Rational MuDistribution::transition(const ElementCode& x, const ElementCode& y) const {
    check_element(spec_, x);
    check_element(spec_, y);
    int c = raised_coordinate(x, y);
    if (c < 0) {
        throw ValidationError(encode(y) + " does not cover " + encode(x));
    }
    const int s = count_twos(x);
    return y.payload[c] == 2 ? table_.to_more_twos(x.rank, s) : table_.to_same_twos(x.rank, s);
}

const Rational& MuDistribution::slice_probability(int i, int s) const {
    if (i < 0 || i > 2 * n_ || s < 0 || s >= static_cast<int>(slice_prob_[i].size())) {
        return zero_rational();
    }
    return slice_prob_[i][s];
}

Rational MuDistribution::element_probability(const ElementCode& x) const {
    check_element(spec_, x);
    return slice_probability(x.rank, count_twos(x));
}

Rational MuDistribution::upward_conditional(int i, int s, int n01, int n02, int n12) const {
    if (n01 < 0 || n02 < 0 || n12 < 0) {
        throw ValidationError("negative coordinate counts");
    }
    const int b = n02 + 1;
    const int c_size = n12 + 1;
    auto index = [&](int a, int b1, int b2, int c) { return ((a * b + b1) * b + b2) * c_size + c; };
    std::vector<Rational> prob(static_cast<std::size_t>(n01 + 1) * b * b * c_size, Rational(0));
    prob[index(0, 0, 0, 0)] = 1;
    const int distance = n01 + 2 * n02 + n12;
    for (int t = 0; t < distance; ++t) {
        for (int a = 0; a <= n01 && a <= t; ++a) {
            for (int b2 = 0; b2 <= n02 && a + 2 * b2 <= t; ++b2) {
                for (int c = 0; c <= n12 && a + 2 * b2 + c <= t; ++c) {
                    int b1 = t - a - 2 * b2 - c;
                    if (b1 + b2 > n02) {
                        continue;
                    }
                    const Rational& p = prob[index(a, b1, b2, c)];
                    if (p == 0) {
                        continue;
                    }
                    const int level = i + t;
                    const int slice = s + b2 + c;
                    const Rational same = p * table_.to_same_twos(level, slice);
                    const Rational more = p * table_.to_more_twos(level, slice);
                    if (a < n01) {
                        prob[index(a + 1, b1, b2, c)] += Rational(n01 - a) * same;
                    }
                    if (b1 + b2 < n02) {
                        prob[index(a, b1 + 1, b2, c)] += Rational(n02 - b1 - b2) * same;
                    }
                    if (b1 > 0) {
                        prob[index(a, b1 - 1, b2 + 1, c)] += Rational(b1) * more;
                    }
                    if (c < n12) {
                        prob[index(a, b1, b2, c + 1)] += Rational(n12 - c) * more;
                    }
                }
            }
        }
    }
    return prob[index(n01, 0, n02, n12)];
}

Rational MuDistribution::conditional(const ElementCode& x, const ElementCode& y) const {
    check_element(spec_, x);
    check_element(spec_, y);
    Relation rel = compare(spec_, x, y);
    if (rel == Relation::equal) {
        return 1;
    }
    if (rel == Relation::incomparable) {
        throw ValidationError(encode(x) + " and " + encode(y) + " are incomparable");
    }
    const ElementCode& low = rel == Relation::less ? x : y;
    const ElementCode& high = rel == Relation::less ? y : x;
    int n01 = 0, n02 = 0, n12 = 0;
    for (int c = 0; c < n_; ++c) {
        int a = low.payload[c], b = high.payload[c];
        n01 += (a == 0 && b == 1);
        n02 += (a == 0 && b == 2);
        n12 += (a == 1 && b == 2);
    }
    Rational up = upward_conditional(low.rank, count_twos(low), n01, n02, n12);
    if (rel == Relation::less) {
        return up;
    }
    // P(low | high) = P(high | low) P(low) / P(high)
    return up * element_probability(low) / element_probability(high);
}

// ---------------------------------------------------------------------------

UniformMaximalChains::UniformMaximalChains(const FamilySpec& spec) : spec_(spec) {
    validate(spec);
    bool ok = spec.family == Family::boolean || spec.family == Family::subspace ||
              (spec.family == Family::rpower && spec.r == 1);
    if (!ok) {
        throw ValidationError("closed-form uniform maximal chains need P(n) or V(q,n)");
    }
}

std::string UniformMaximalChains::encode(const ElementCode& x) const {
    return posetsat::encode(spec_, x);
}

Integer UniformMaximalChains::ways(int i, int j) const {
    if (spec_.family == Family::subspace) {
        return gaussian_binomial(spec_.n - i, j - i, spec_.q);
    }
    return binomial(spec_.n - i, j - i);
}

std::vector<Step> UniformMaximalChains::start_steps() const {
    return {Step(bottom_element(spec_), Rational(1))};
}

std::vector<Step> UniformMaximalChains::next_steps(const ElementCode& x) const {
    check_element(spec_, x);
    std::vector<Step> out;
    if (x.rank >= spec_.n) {
        return out;
    }
    Rational p = make_rational(1, ways(x.rank, x.rank + 1));
    for (ElementCode& y : upper_covers(spec_, x)) {
        out.emplace_back(std::move(y), p);
    }
    return out;
}

Rational UniformMaximalChains::transition(const ElementCode& x, const ElementCode& y) const {
    check_element(spec_, x);
    check_element(spec_, y);
    if (y.rank != x.rank + 1 || compare(spec_, x, y) != Relation::less) {
        throw ValidationError(encode(y) + " does not cover " + encode(x));
    }
    return make_rational(1, ways(x.rank, y.rank));
}

Rational UniformMaximalChains::element_probability(const ElementCode& x) const {
    check_element(spec_, x);
    return make_rational(1, level_size(spec_, x.rank));
}

Rational UniformMaximalChains::conditional(const ElementCode& x, const ElementCode& y) const {
    check_element(spec_, x);
    check_element(spec_, y);
    Relation rel = compare(spec_, x, y);
    if (rel == Relation::equal) {
        return 1;
    }
    if (rel == Relation::incomparable) {
        throw ValidationError(encode(x) + " and " + encode(y) + " are incomparable");
    }
    if (rel == Relation::less) {
        return make_rational(1, ways(x.rank, y.rank));
    }
    // P(y | x) = P(x | y) |L_rank(x)| / |L_rank(y)|
    return make_rational(level_size(spec_, x.rank), ways(y.rank, x.rank) * level_size(spec_, y.rank));
}

// ---------------------------------------------------------------------------

ExplicitChainDistribution::ExplicitChainDistribution(std::shared_ptr<const RankedPoset> poset, std::string kind,
                                                     std::vector<Rational> start,
                                                     std::vector<std::vector<Rational>> transitions)
    : poset_(std::move(poset)), kind_(std::move(kind)), start_(std::move(start)), transitions_(std::move(transitions)) {
    const RankedPoset& P = *poset_;
    if (start_.size() != P.level_count(0) || transitions_.size() != P.size()) {
        throw ValidationError("transition table does not match the poset");
    }
    Rational start_sum = 0;
    for (const Rational& p : start_) {
        if (p < 0) {
            throw ValidationError("negative start probability");
        }
        start_sum += p;
    }
    if (start_sum != 1) {
        throw ValidationError("start probabilities sum to " + fraction_string(start_sum));
    }
    prob_.assign(P.size(), Rational(0));
    for (std::size_t a = 0; a < start_.size(); ++a) {
        prob_[P.level_begin(0) + a] = start_[a];
    }
    for (std::size_t a = 0; a < P.size(); ++a) {
        const auto& covers = P.upper_covers(a);
        if (transitions_[a].size() != covers.size()) {
            throw ValidationError("transition row size mismatch at " + P.encode(a));
        }
        Rational row_sum = 0;
        for (std::size_t k = 0; k < covers.size(); ++k) {
            if (transitions_[a][k] < 0) {
                throw ValidationError("negative transition probability at " + P.encode(a));
            }
            row_sum += transitions_[a][k];
            prob_[covers[k]] += prob_[a] * transitions_[a][k];
        }
        if (prob_[a] > 0 && P.rank(a) < P.top_rank() && row_sum != 1) {
            throw ValidationError("transition probabilities out of " + P.encode(a) + " sum to " +
                                  fraction_string(row_sum));
        }
    }
}

std::string ExplicitChainDistribution::encode(const ElementCode& x) const {
    return poset_->encode(poset_->index_of(x));
}

std::vector<Step> ExplicitChainDistribution::start_steps() const {
    std::vector<Step> out;
    for (std::size_t a = 0; a < start_.size(); ++a) {
        if (start_[a] != 0) {
            out.emplace_back(poset_->element(poset_->level_begin(0) + a), start_[a]);
        }
    }
    return out;
}

std::vector<Step> ExplicitChainDistribution::next_steps(const ElementCode& x) const {
    std::size_t a = poset_->index_of(x);
    std::vector<Step> out;
    const auto& covers = poset_->upper_covers(a);
    for (std::size_t k = 0; k < covers.size(); ++k) {
        if (transitions_[a][k] != 0) {
            out.emplace_back(poset_->element(covers[k]), transitions_[a][k]);
        }
    }
    return out;
}

Rational ExplicitChainDistribution::transition(const ElementCode& x, const ElementCode& y) const {
    std::size_t a = poset_->index_of(x);
    std::size_t b = poset_->index_of(y);
    const auto& covers = poset_->upper_covers(a);
    for (std::size_t k = 0; k < covers.size(); ++k) {
        if (covers[k] == b) {
            return transitions_[a][k];
        }
    }
    throw ValidationError(poset_->encode(b) + " does not cover " + poset_->encode(a));
}

Rational ExplicitChainDistribution::element_probability(const ElementCode& x) const {
    return prob_[poset_->index_of(x)];
}

Rational ExplicitChainDistribution::upward_conditional(std::size_t a, std::size_t b) const {
    const RankedPoset& P = *poset_;
    const std::size_t lo = P.level_begin(P.rank(a));
    const std::size_t hi = P.level_end(P.rank(b));
    std::vector<Rational> local(hi - lo, Rational(0));
    local[a - lo] = 1;
    for (std::size_t z = a; z < P.level_begin(P.rank(b)); ++z) {
        if (local[z - lo] == 0) {
            continue;
        }
        const auto& covers = P.upper_covers(z);
        for (std::size_t k = 0; k < covers.size(); ++k) {
            std::size_t w = covers[k];
            if (w == b || P.less(w, b)) {
                local[w - lo] += local[z - lo] * transitions_[z][k];
            }
        }
    }
    return local[b - lo];
}

Rational ExplicitChainDistribution::conditional(const ElementCode& x, const ElementCode& y) const {
    std::size_t a = poset_->index_of(x);
    std::size_t b = poset_->index_of(y);
    Relation rel = poset_->compare(a, b);
    if (rel == Relation::equal) {
        return 1;
    }
    if (rel == Relation::incomparable) {
        throw ValidationError(poset_->encode(a) + " and " + poset_->encode(b) + " are incomparable");
    }
    if (rel == Relation::less) {
        return upward_conditional(a, b);
    }
    if (prob_[a] == 0) {
        throw ValidationError("conditioning on an element of probability zero");
    }
    return upward_conditional(b, a) * prob_[b] / prob_[a];
}

// ---------------------------------------------------------------------------

std::shared_ptr<ExplicitChainDistribution> uniform_maximal_chains(std::shared_ptr<const RankedPoset> poset) {
    const RankedPoset& P = *poset;
    std::vector<Integer> count(P.size(), 0);
    for (std::size_t a = P.size(); a-- > 0;) {
        if (P.rank(a) == P.top_rank()) {
            count[a] = 1;
            continue;
        }
        for (std::size_t b : P.upper_covers(a)) {
            count[a] += count[b];
        }
    }
    Integer total = 0;
    for (std::size_t a = P.level_begin(0); a < P.level_end(0); ++a) {
        total += count[a];
    }
    if (total == 0) {
        throw ValidationError(P.label() + " has no maximal chain reaching the top rank");
    }
    std::vector<Rational> start;
    for (std::size_t a = P.level_begin(0); a < P.level_end(0); ++a) {
        start.push_back(make_rational(count[a], total));
    }
    std::vector<std::vector<Rational>> transitions(P.size());
    for (std::size_t a = 0; a < P.size(); ++a) {
        for (std::size_t b : P.upper_covers(a)) {
            transitions[a].push_back(count[a] == 0 ? Rational(0) : make_rational(count[b], count[a]));
        }
    }
    return std::make_shared<ExplicitChainDistribution>(std::move(poset), "uniform_maximal", std::move(start),
                                                       std::move(transitions));
}

std::shared_ptr<ExplicitChainDistribution> explicit_mu(std::shared_ptr<const RankedPoset> poset) {
    const RankedPoset& P = *poset;
    if (!P.is_family() || P.spec().family != Family::rpower || P.spec().r != 2 || P.spec().n < 1) {
        throw ValidationError("mu is defined on {0,1,2}^n with n >= 1");
    }
    WeightTable table(P.spec().n);
    std::vector<std::vector<Rational>> transitions(P.size());
    for (std::size_t a = 0; a < P.size(); ++a) {
        const int s = count_twos(P.element(a));
        for (std::size_t b : P.upper_covers(a)) {
            bool more = count_twos(P.element(b)) > s;
            transitions[a].push_back(more ? table.to_more_twos(P.rank(a), s) : table.to_same_twos(P.rank(a), s));
        }
    }
    return std::make_shared<ExplicitChainDistribution>(std::move(poset), "mu_multiset", std::vector<Rational>{1},
                                                       std::move(transitions));
}

std::shared_ptr<const ChainDistribution> default_distribution(std::shared_ptr<const RankedPoset> poset) {
    if (poset->is_family()) {
        const FamilySpec& spec = poset->spec();
        if (spec.family == Family::boolean || spec.family == Family::subspace) {
            return std::make_shared<UniformMaximalChains>(spec);
        }
        if (spec.family == Family::rpower && spec.r == 2 && spec.n >= 1) {
            return std::make_shared<MuDistribution>(spec.n);
        }
    }
    return uniform_maximal_chains(std::move(poset));
}

std::vector<ElementCode> sample_chain(const ChainDistribution& dist, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Integer scale = Integer(1) << 64;
    auto pick = [&](const std::vector<Step>& steps) -> const ElementCode& {
        if (steps.empty()) {
            throw ValidationError("chain distribution has no step to take");
        }
        std::uint64_t draw = rng();
        Integer u;
        mpz_import(u.get_mpz_t(), 1, 1, sizeof draw, 0, 0, &draw);
        Rational cumulative = 0;
        for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
            cumulative += steps[k].second;
            // u / 2^64 < cumulative
            if (u * cumulative.get_den() < scale * cumulative.get_num()) {
                return steps[k].first;
            }
        }
        return steps.back().first;
    };
    std::vector<ElementCode> chain;
    chain.push_back(pick(dist.start_steps()));
    while (chain.back().rank < dist.top_rank()) {
        chain.push_back(pick(dist.next_steps(chain.back())));
    }
    return chain;
}

std::vector<std::pair<std::vector<ElementCode>, Rational>> enumerate_chains(const ChainDistribution& dist,
                                                                            std::size_t max_chains) {
    std::vector<std::pair<std::vector<ElementCode>, Rational>> out;
    std::vector<ElementCode> path;
    std::function<void(const ElementCode&, const Rational&)> walk = [&](const ElementCode& x, const Rational& p) {
        path.push_back(x);
        if (x.rank >= dist.top_rank()) {
            if (out.size() >= max_chains) {
                throw ResourceLimitError("more than " + std::to_string(max_chains) + " maximal chains");
            }
            out.emplace_back(path, p);
        } else {
            for (const Step& step : dist.next_steps(x)) {
                walk(step.first, p * step.second);
            }
        }
        path.pop_back();
    };
    for (const Step& step : dist.start_steps()) {
        walk(step.first, step.second);
    }
    return out;
}

}  // namespace posetsat
