#include "posetsat/chain.hpp"
#include "posetsat/digraph.hpp"
#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/supersat.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace posetsat;

namespace {

std::vector<FamilySpec> oracle_sized() {
    return {FamilySpec::boolean_lattice(2), FamilySpec::boolean_lattice(3), FamilySpec::boolean_lattice(4),
            FamilySpec::multiset(2),        FamilySpec::grid(2, 3),         FamilySpec::subspaces(3, 2),
            FamilySpec::subspaces(2, 3)};
}

std::vector<std::size_t> indices(const RankedPoset& poset, const std::vector<std::string>& codes) {
    std::vector<std::size_t> out;
    for (const auto& code : codes) {
        out.push_back(poset.decode(code));
    }
    return out;
}

}  // namespace

TEST(Comp, Examples) {
    RankedPoset cube = RankedPoset::build(FamilySpec::boolean_lattice(3));
    EXPECT_EQ(comp(cube, indices(cube, {"000", "100", "110"})), 3);
    EXPECT_EQ(comp(cube, indices(cube, {"100", "010", "001"})), 0);
    EXPECT_EQ(comp(cube, indices(cube, {"000", "100", "010", "110"})), 5);
    EXPECT_EQ(comp(cube, {}), 0);
    EXPECT_THROW(comp(cube, {1, 1}), ValidationError);
    SubsetWitness w = make_witness(cube, indices(cube, {"110", "000"}));
    EXPECT_EQ(w.comp, 1);
    EXPECT_EQ(w.to_json(cube)["members"], nlohmann::json({"000", "110"}));
}

TEST(BruteMinComp, MatchesOracleEverySize) {
    for (const FamilySpec& spec : oracle_sized()) {
        RankedPoset poset = RankedPoset::build(spec);
        auto c = oracle::comparability(poset);
        std::vector<long> expected = oracle::min_comp_all(c);
        Limits branch;
        branch.max_subsets = 1;
        std::vector<MinCompResult> profile = min_comp_profile(poset);
        for (long m = 0; m <= static_cast<long>(poset.size()); ++m) {
            for (const Limits& limits : {Limits{}, branch}) {
                MinCompResult r = brute_min_comp(poset, m, limits);
                EXPECT_EQ(r.min, expected[m]) << describe(spec) << " m=" << m;
                EXPECT_EQ(r.witness.members.size(), static_cast<std::size_t>(m));
                EXPECT_EQ(oracle::comp(c, r.witness.members), expected[m]);
            }
            EXPECT_EQ(profile[m].min, expected[m]) << describe(spec) << " m=" << m;
            EXPECT_EQ(oracle::comp(c, profile[m].witness.members), expected[m]);
        }
    }
}

TEST(BruteMinComp, SmallExamples) {
    RankedPoset square = RankedPoset::build(FamilySpec::boolean_lattice(2));
    EXPECT_EQ(brute_min_comp(square, 3).min, 2);
    RankedPoset grid = RankedPoset::build(FamilySpec::multiset(2));
    // The only 3-antichain is the middle level; any fourth element meets two of it.
    EXPECT_EQ(brute_min_comp(grid, 4).min, 2);
    EXPECT_THROW(brute_min_comp(grid, 10), ValidationError);
    EXPECT_THROW(brute_min_comp(grid, -1), ValidationError);
}

TEST(BruteMinComp, ResourceLimit) {
    RankedPoset big = RankedPoset::build(FamilySpec::boolean_lattice(6));
    Limits tight;
    tight.max_subsets = 1;
    tight.max_branch_elements = 20;
    EXPECT_THROW(brute_min_comp(big, 30, tight), ResourceLimitError);
    EXPECT_THROW(min_comp_profile(big, tight), ResourceLimitError);
}

TEST(FindSubsetBelow, AgreesWithMinimum) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(4));
    auto expected = oracle::min_comp_all(oracle::comparability(poset));
    for (long m = 1; m <= 16; ++m) {
        EXPECT_FALSE(find_subset_below(poset, m, expected[m]).has_value()) << m;
        auto w = find_subset_below(poset, m, expected[m] + 1);
        ASSERT_TRUE(w.has_value()) << m;
        EXPECT_EQ(w->comp, expected[m]);
        EXPECT_EQ(w->members.size(), static_cast<std::size_t>(m));
    }
}

TEST(TheoremBound, Examples) {
    BoundResult b = theorem_bound(Theorem::boolean_lattice, 4, 1);
    EXPECT_EQ(b.threshold, 6);
    EXPECT_EQ(b.rate, 3);
    EXPECT_EQ(b.bound(8), 6);
    EXPECT_EQ(b.bound(5), 0);
    EXPECT_FALSE(b.caveat.empty());
    BoundResult v = theorem_bound(Theorem::vector_space, 3, 1, 2);
    EXPECT_EQ(v.threshold, 7);
    EXPECT_EQ(v.rate, 3);
    for (int n = 2; n <= 12; ++n) {
        BoundResult mset = theorem_bound(Theorem::multiset, n, 1);
        EXPECT_EQ(mset.rate, make_rational(n - 1, 2));
        EXPECT_EQ(mset.threshold, multiset_level(n, n));
    }
    EXPECT_EQ(theorem_bound(Theorem::boolean_lattice, 6, 2).threshold, binomial(6, 3) + binomial(6, 4));
    EXPECT_THROW(theorem_bound(Theorem::boolean_lattice, 4, 0), ValidationError);
    EXPECT_THROW(theorem_bound(Theorem::multiset, 2, 2), ValidationError);
    EXPECT_THROW(theorem_bound(Theorem::vector_space, 3, 1, 6), ValidationError);
    EXPECT_EQ(parse_theorem(theorem_name(Theorem::multiset)), Theorem::multiset);
}

TEST(Constructions, ExtremalSubspaceCount) {
    for (int n : {3, 4}) {
        for (int q : {2, 3}) {
            RankedPoset poset = RankedPoset::build(FamilySpec::subspaces(n, q));
            auto c = oracle::comparability(poset);
            Integer per = gaussian_binomial((n + 2) / 2, 1, q);
            long lower = gaussian_binomial(n, (n - 1) / 2, q).get_si();
            for (long t = 0; t <= lower; ++t) {
                SubsetWitness w = extremal_construction(poset, t);
                EXPECT_EQ(w.comp, per * t) << n << " " << q << " " << t;
                EXPECT_EQ(oracle::comp(c, w.members), w.comp);
            }
        }
    }
    RankedPoset v3 = RankedPoset::build(FamilySpec::subspaces(3, 2));
    EXPECT_EQ(extremal_construction(v3, 2).comp, 6);
}

TEST(Constructions, CenteredMatchesMinimumOnSmallCubes) {
    for (int n = 0; n <= 4; ++n) {
        RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(n));
        auto expected = oracle::min_comp_all(oracle::comparability(poset));
        for (long m = 0; m <= static_cast<long>(poset.size()); ++m) {
            SubsetWitness w = centered_construction(poset, m);
            EXPECT_EQ(w.members.size(), static_cast<std::size_t>(m));
            EXPECT_EQ(w.comp, expected[m]) << n << " " << m;
        }
    }
    EXPECT_TRUE(explore_conjecture(3, 1).all_equal());
}

TEST(RandomChainBound, ChainAndAntichain) {
    auto chain = std::make_shared<RankedPoset>(
        RankedPoset::custom({0, 1, 2, 3}, [](std::size_t a, std::size_t b) { return a < b; }, "chain4"));
    ComparabilityDigraph digraph = build_digraph(*chain, OrientationRule::toward_middle_with_complement_arcs);
    auto dist = uniform_maximal_chains(chain);
    for (long m = 0; m <= 4; ++m) {
        EXPECT_EQ(random_chain_lower_bound(*chain, digraph, *dist, m), std::max(0L, m - 1));
    }
    auto flat = std::make_shared<RankedPoset>(
        RankedPoset::custom({0, 0, 0}, [](std::size_t, std::size_t) { return false; }, "flat3"));
    ComparabilityDigraph none = build_digraph(*flat, OrientationRule::toward_middle_with_complement_arcs);
    auto flat_dist = uniform_maximal_chains(flat);
    EXPECT_EQ(random_chain_lower_bound(*flat, none, *flat_dist, 3), 0);
}

TEST(RandomChainBound, BelowExactMinimum) {
    for (const FamilySpec& spec : oracle_sized()) {
        auto poset = std::make_shared<RankedPoset>(RankedPoset::build(spec));
        ComparabilityDigraph digraph = build_digraph(*poset, OrientationRule::toward_middle_with_complement_arcs);
        auto dist = default_distribution(poset);
        RandomCountBound params = random_count_parameters(*poset, digraph, *dist);
        auto expected = oracle::min_comp_all(oracle::comparability(*poset));
        for (long m = 0; m <= static_cast<long>(poset->size()); ++m) {
            EXPECT_LE(params.bound(m), expected[m]) << describe(spec) << " m=" << m;
        }
    }
}
