#include "posetsat/containers.hpp"
#include "posetsat/errors.hpp"
#include "posetsat/supersat.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace posetsat;

namespace {

StageConfig config_of(std::vector<Stage> stages) {
    StageConfig config;
    config.stages = std::move(stages);
    return config;
}

}  // namespace

TEST(CountAntichains, MatchesOracle) {
    for (const FamilySpec& spec : {FamilySpec::boolean_lattice(0), FamilySpec::boolean_lattice(1),
                                   FamilySpec::boolean_lattice(2), FamilySpec::boolean_lattice(3),
                                   FamilySpec::boolean_lattice(4), FamilySpec::multiset(2), FamilySpec::grid(2, 3),
                                   FamilySpec::subspaces(3, 2), FamilySpec::subspaces(2, 3)}) {
        RankedPoset poset = RankedPoset::build(spec);
        Integer expected = static_cast<unsigned long>(oracle::antichain_count(oracle::comparability(poset)));
        EXPECT_EQ(count_antichains(poset), expected) << describe(spec);
        std::uint64_t visited = 0;
        for_each_antichain(poset, poset.order(), [&](const std::vector<std::size_t>&) { ++visited; });
        EXPECT_EQ(Integer(static_cast<unsigned long>(visited)), expected);
    }
}

TEST(CountAntichains, ChainAndBudget) {
    for (std::size_t len = 1; len <= 6; ++len) {
        std::vector<int> ranks(len);
        for (std::size_t i = 0; i < len; ++i) {
            ranks[i] = static_cast<int>(i);
        }
        RankedPoset chain = RankedPoset::custom(ranks, [](std::size_t a, std::size_t b) { return a < b; }, "chain");
        EXPECT_EQ(count_antichains(chain), static_cast<long>(len + 1));
    }
    RankedPoset cube = RankedPoset::build(FamilySpec::boolean_lattice(5));
    EXPECT_THROW(count_antichains(cube, {}, 10), ResourceLimitError);
}

TEST(StageConfig, JsonAndValidation) {
    StageConfig config = config_of({{2, 11}, {1, 8}});
    config.certified = true;
    StageConfig back = StageConfig::from_json(config.to_json());
    ASSERT_EQ(back.k(), 2U);
    EXPECT_EQ(back.stages[1].m, 8);
    EXPECT_TRUE(back.certified);
    EXPECT_NO_THROW(validate(config, 16));
    EXPECT_THROW(validate(config, 11), ValidationError);
    EXPECT_THROW(validate(config_of({{1, 11}, {2, 8}}), 16), ValidationError);
    EXPECT_THROW(validate(config_of({{2, 8}, {1, 11}}), 16), ValidationError);
    EXPECT_THROW(validate(config_of({{0, 8}}), 16), ValidationError);
    EXPECT_THROW(validate(config_of({}), 16), ValidationError);
    EXPECT_THROW(StageConfig::from_json(nlohmann::json::parse(R"({"stages":[{"d":2}]})")), ValidationError);
}

TEST(Premises, CertifiedSizesAreTight) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(4));
    auto minima = oracle::min_comp_all(oracle::comparability(poset));
    StageConfig config = find_certified_stages(poset, {2, 1});
    ASSERT_EQ(config.k(), 2U);
    EXPECT_TRUE(config.certified);
    EXPECT_EQ(config.stages[0].m, 11);
    EXPECT_EQ(config.stages[1].m, 8);
    for (const Stage& stage : config.stages) {
        for (long s = stage.m + 1; s <= 16; ++s) {
            EXPECT_GE(minima[s], s * stage.d) << stage.d << " " << s;
        }
        EXPECT_LT(minima[stage.m], stage.m * stage.d);
        EXPECT_FALSE(premise_counterexample(poset, stage).has_value());
        EXPECT_TRUE(premise_counterexample(poset, {stage.d, stage.m - 1}).has_value());
    }
    StageConfig bad = config_of({{3, 5}});
    CheckReport report = certify_stages(poset, bad);
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(bad.certified);
}

TEST(KwRun, EmptyAntichainAndSmallSquare) {
    RankedPoset square = RankedPoset::build(FamilySpec::boolean_lattice(2));
    FiniteOrder order = square.order();
    StageConfig config = config_of({{1, 3}});
    ASSERT_TRUE(certify_stages(square, config).passed());
    ContainerRun empty = kw_run(square, order, config, {});
    EXPECT_TRUE(empty.fingerprints[0].empty());
    EXPECT_TRUE(check_run(square, order, config, {}, empty).passed());
    for (const auto& antichain : std::vector<std::vector<std::size_t>>{{1}, {2}, {1, 2}, {0}, {3}}) {
        ContainerRun run = kw_run(square, order, config, antichain);
        CheckReport report = check_run(square, order, config, antichain, run);
        EXPECT_TRUE(report.passed()) << report.to_json().dump();
        auto c = run.container();
        EXPECT_TRUE(std::includes(c.begin(), c.end(), antichain.begin(), antichain.end()));
    }
    EXPECT_THROW(kw_run(square, order, config, {0, 3}), ValidationError);
}

TEST(KwRun, DeterministicOverCube) {
    RankedPoset cube = RankedPoset::build(FamilySpec::boolean_lattice(3));
    FiniteOrder order = cube.order();
    StageConfig config = find_certified_stages(cube, {2, 1});
    for_each_antichain(cube, order, [&](const std::vector<std::size_t>& antichain) {
        ContainerRun a = kw_run(cube, order, config, antichain);
        ContainerRun b = kw_run(cube, order, config, antichain);
        EXPECT_EQ(a.fingerprints, b.fingerprints);
        EXPECT_EQ(a.containers, b.containers);
        EXPECT_TRUE(check_run(cube, order, config, antichain, a).passed());
    });
}

TEST(ContainerFamily, CubeAuditAndBounds) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(4));
    StageConfig config = find_certified_stages(poset, {2, 1});
    ContainerFamily family = build_family(poset, config);
    EXPECT_TRUE(family.report.passed()) << family.report.to_json().dump();
    EXPECT_EQ(family.antichains, 168U);
    EXPECT_LE(Integer(static_cast<unsigned long>(family.containers.size())), family.count_bound);
    EXPECT_LE(Rational(static_cast<long>(family.largest)), family.size_bound);
    std::string dump = family.dump(poset);
    EXPECT_EQ(static_cast<std::size_t>(std::count(dump.begin(), dump.end(), '\n')), family.containers.size());
}

TEST(CountBound, CertificationRequired) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(4));
    StageConfig uncertified = config_of({{2, 11}, {1, 8}});
    EXPECT_THROW(count_upper_bound(16, uncertified), ValidationError);
    EXPECT_NO_THROW(count_upper_bound(16, uncertified, true));
    StageConfig config = find_certified_stages(poset, {2, 1});
    CountBound bound = count_upper_bound(16, config);
    Integer total = bound.container_count * (Integer(1) << static_cast<mp_bitcnt_t>(bound.container_size.get_ui()));
    EXPECT_GE(total, 168);
    EXPECT_GE(bound.log2_upper, log2_lower(Integer(168)));
}

TEST(StageParameters, FeasibilityAtFiniteN) {
    StageParameters small = counting_stage_parameters(FamilySpec::boolean_lattice(4));
    EXPECT_FALSE(small.feasible);
    EXPECT_FALSE(small.reason.empty());
    StageParameters larger = counting_stage_parameters(FamilySpec::boolean_lattice(60));
    EXPECT_TRUE(larger.feasible) << larger.reason;
    if (larger.feasible) {
        EXPECT_EQ(larger.config.k(), 2U);
        EXPECT_GT(larger.config.stages[0].d, larger.config.stages[1].d);
        EXPECT_GT(larger.config.stages[0].m, larger.config.stages[1].m);
    }
    EXPECT_FALSE(counting_stage_parameters(FamilySpec::boolean_lattice(200)).feasible);
}
