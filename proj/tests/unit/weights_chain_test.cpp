#include "posetsat/chain.hpp"
#include "posetsat/chain_checks.hpp"
#include "posetsat/errors.hpp"
#include "posetsat/weights.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

using namespace posetsat;

namespace {

using ChainList = std::vector<std::pair<std::vector<ElementCode>, Rational>>;

bool contains(const std::vector<ElementCode>& chain, const ElementCode& x) {
    return std::find(chain.begin(), chain.end(), x) != chain.end();
}

Rational chain_mass(const ChainList& chains, const ElementCode& x) {
    Rational total = 0;
    for (const auto& [chain, p] : chains) {
        if (contains(chain, x)) {
            total += p;
        }
    }
    return total;
}

Rational joint_mass(const ChainList& chains, const ElementCode& x, const ElementCode& y) {
    Rational total = 0;
    for (const auto& [chain, p] : chains) {
        if (contains(chain, x) && contains(chain, y)) {
            total += p;
        }
    }
    return total;
}

// Compares element probabilities and every comparable conditional with sums over
// the enumerated chains.
void check_against_chains(const ChainDistribution& dist, const RankedPoset& poset) {
    ChainList chains = enumerate_chains(dist);
    Rational total = 0;
    for (const auto& entry : chains) {
        total += entry.second;
    }
    EXPECT_EQ(total, 1);
    for (std::size_t a = 0; a < poset.size(); ++a) {
        const ElementCode& x = poset.element(a);
        Rational px = chain_mass(chains, x);
        EXPECT_EQ(dist.element_probability(x), px) << dist.kind() << " " << poset.encode(a);
        if (px == 0) {
            continue;
        }
        for (std::size_t b = 0; b < poset.size(); ++b) {
            if (a == b || !poset.comparable(a, b)) {
                continue;
            }
            const ElementCode& y = poset.element(b);
            EXPECT_EQ(dist.conditional(x, y), joint_mass(chains, x, y) / px)
                << dist.kind() << " " << poset.encode(a) << " " << poset.encode(b);
        }
        EXPECT_EQ(dist.conditional(x, x), 1);
    }
}

}  // namespace

TEST(Weights, SmallTable) {
    WeightTable table(2);
    EXPECT_EQ(table.wprime(0, 0), Rational(1, 2));
    EXPECT_EQ(table.w(0, 0), 0);
    EXPECT_EQ(table.w(1, 0), Rational(1, 3));
    EXPECT_EQ(table.wprime(1, 0), Rational(1, 6));
    EXPECT_EQ(table.to_more_twos(1, 0), Rational(2, 3));
    EXPECT_EQ(table.to_same_twos(1, 0), Rational(1, 3));
    EXPECT_NE(table.csv().find("\n1,0,1/3,1/6\n"), std::string::npos);
    EXPECT_EQ(table.w(9, 9), 0);
    EXPECT_FALSE(WeightTable::valid(2, 3, 0));
    EXPECT_TRUE(WeightTable::valid(2, 3, 1));
}

TEST(Weights, FlowConservation) {
    for (int n = 1; n <= 25; ++n) {
        WeightTable table(n);
        for (int i = 0; i < 2 * n; ++i) {
            for (int s = table.min_slice(i); s <= table.max_slice(i); ++s) {
                Rational out = (i - 2 * s) * table.w(i, s) + (n - i + s) * table.wprime(i, s);
                EXPECT_EQ(out * table.profile().size(i), 1) << n << " " << i << " " << s;
                EXPECT_GE(table.w(i, s), 0);
                EXPECT_GE(table.wprime(i, s), 0);
            }
        }
    }
}

TEST(ChainChecks, IdentitiesAndUniformity) {
    for (int n = 1; n <= 20; ++n) {
        EXPECT_TRUE(verify_weight_identities(n).passed()) << n;
        EXPECT_TRUE(verify_level_uniformity(n).passed()) << n;
        EXPECT_TRUE(verify_weight_inequalities(n).passed()) << n;
    }
    for (int n = 1; n <= 5; ++n) {
        EXPECT_TRUE(verify_element_uniformity(n).passed()) << n;
    }
}

TEST(ChainChecks, ConditionalThreshold) {
    for (int n = 3; n <= 30; ++n) {
        EXPECT_EQ(conditional_threshold(n, 1), make_rational(2, n - 1)) << n;
    }
    EXPECT_FALSE(conditional_threshold(2, 2).has_value());
    EXPECT_TRUE(verify_conditional_bound(8, 1).passed());
    EXPECT_LT(max_conditional_decay_factor(), 0.99);
    EXPECT_NEAR(conditional_decay_factor(1.0), 2.0 * 0.5 / (std::exp(0.5) * std::sqrt(0.5)), 1e-12);
}

TEST(MuDistribution, MatchesChainEnumeration) {
    for (int n = 1; n <= 3; ++n) {
        RankedPoset poset = RankedPoset::build(FamilySpec::multiset(n));
        MuDistribution mu(n);
        check_against_chains(mu, poset);
        for (std::size_t a = 0; a < poset.size(); ++a) {
            EXPECT_EQ(mu.element_probability(poset.element(a)) * mu.weights().profile().size(poset.rank(a)), 1);
        }
    }
}

TEST(MuDistribution, ExplicitRouteAgrees) {
    for (int n = 1; n <= 4; ++n) {
        auto poset = std::make_shared<RankedPoset>(RankedPoset::build(FamilySpec::multiset(n)));
        MuDistribution mu(n);
        auto explicit_dist = explicit_mu(poset);
        for (std::size_t a = 0; a < poset->size(); ++a) {
            EXPECT_EQ(explicit_dist->probability_at(a), mu.element_probability(poset->element(a)));
            for (std::size_t b = 0; b < poset->size(); ++b) {
                if (poset->less(a, b)) {
                    EXPECT_EQ(explicit_dist->upward_conditional(a, b),
                              mu.conditional(poset->element(a), poset->element(b)));
                }
            }
        }
    }
}

TEST(MuDistribution, TransitionsRejectNonCovers) {
    MuDistribution mu(2);
    FamilySpec spec = FamilySpec::multiset(2);
    EXPECT_EQ(mu.transition(decode(spec, "10"), decode(spec, "20")), Rational(2, 3));
    EXPECT_EQ(mu.transition(decode(spec, "10"), decode(spec, "11")), Rational(1, 3));
    EXPECT_THROW(mu.transition(decode(spec, "10"), decode(spec, "21")), ValidationError);
}

TEST(UniformChains, ClosedFormsMatchEnumeration) {
    for (const FamilySpec& spec : {FamilySpec::boolean_lattice(2), FamilySpec::boolean_lattice(3),
                                   FamilySpec::boolean_lattice(4), FamilySpec::subspaces(3, 2),
                                   FamilySpec::subspaces(2, 3)}) {
        RankedPoset poset = RankedPoset::build(spec);
        UniformMaximalChains dist(spec);
        check_against_chains(dist, poset);
        std::vector<Integer> sizes = level_sizes(spec);
        for (std::size_t a = 0; a < poset.size(); ++a) {
            EXPECT_EQ(dist.element_probability(poset.element(a)), Rational(1) / Rational(sizes[poset.rank(a)]));
        }
    }
    UniformMaximalChains cube(FamilySpec::boolean_lattice(2));
    EXPECT_EQ(cube.element_probability(decode(FamilySpec::boolean_lattice(2), "10")), Rational(1, 2));
}

TEST(UniformChains, GenericRouteCountsChains) {
    std::vector<FamilySpec> specs = {FamilySpec::multiset(2), FamilySpec::grid(2, 3), FamilySpec::boolean_lattice(3)};
    for (const FamilySpec& spec : specs) {
        auto poset = std::make_shared<RankedPoset>(RankedPoset::build(spec));
        auto dist = uniform_maximal_chains(poset);
        std::size_t count = oracle::maximal_chains(*poset).size();
        ChainList chains = enumerate_chains(*dist);
        EXPECT_EQ(chains.size(), count) << describe(spec);
        for (const auto& entry : chains) {
            EXPECT_EQ(entry.second, Rational(1, static_cast<long>(count)));
        }
        check_against_chains(*dist, *poset);
    }
    // Non-regular: a diamond with an extra pendant cover.
    auto custom = std::make_shared<RankedPoset>(RankedPoset::custom(
        {0, 1, 1, 2, 2}, [](std::size_t a, std::size_t b) {
            static const bool rel[5][5] = {{0, 1, 1, 1, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 0}, {0}, {0}};
            return rel[a][b];
        },
        "pendant"));
    auto dist = uniform_maximal_chains(custom);
    EXPECT_EQ(enumerate_chains(*dist).size(), 3U);
    EXPECT_EQ(dist->probability_at(1), Rational(2, 3));
    EXPECT_EQ(dist->probability_at(3), Rational(2, 3));
}

TEST(Sampling, DeterministicAndValid) {
    MuDistribution mu(3);
    RankedPoset poset = RankedPoset::build(FamilySpec::multiset(3));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto chain = sample_chain(mu, seed);
        EXPECT_EQ(chain, sample_chain(mu, seed));
        ASSERT_EQ(chain.size(), 7U);
        for (std::size_t i = 1; i < chain.size(); ++i) {
            auto covers = poset.upper_covers(poset.index_of(chain[i - 1]));
            EXPECT_NE(std::find(covers.begin(), covers.end(), poset.index_of(chain[i])), covers.end());
        }
    }
}

TEST(Sampling, FrequenciesMatchProbabilities) {
    MuDistribution mu(2);
    FamilySpec spec = FamilySpec::multiset(2);
    const int trials = 20000;
    std::map<ElementCode, int> hits;
    for (int t = 0; t < trials; ++t) {
        for (const ElementCode& x : sample_chain(mu, 1000 + t)) {
            ++hits[x];
        }
    }
    for (const char* text : {"10", "20", "11", "21"}) {
        ElementCode x = decode(spec, text);
        double p = to_double(mu.element_probability(x));
        double sigma = std::sqrt(p * (1 - p) / trials);
        EXPECT_NEAR(static_cast<double>(hits[x]) / trials, p, 3 * sigma) << text;
    }
}
