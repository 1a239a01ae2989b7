#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/poset.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace posetsat;

namespace {

std::vector<FamilySpec> small_families() {
    return {FamilySpec::boolean_lattice(0), FamilySpec::boolean_lattice(3), FamilySpec::boolean_lattice(4),
            FamilySpec::multiset(2),        FamilySpec::multiset(3),        FamilySpec::grid(2, 3),
            FamilySpec::subspaces(3, 2),    FamilySpec::subspaces(2, 3),    FamilySpec::subspaces(2, 5)};
}

}  // namespace

TEST(Poset, OrderMatchesFirstPrinciples) {
    for (const FamilySpec& spec : small_families()) {
        RankedPoset poset = RankedPoset::build(spec);
        FiniteOrder order = poset.order();
        std::uint64_t relations = 0;
        for (std::size_t a = 0; a < poset.size(); ++a) {
            for (std::size_t b = 0; b < poset.size(); ++b) {
                bool expected = a != b && oracle::leq(poset, a, b);
                relations += expected;
                EXPECT_EQ(poset.less(a, b), expected) << describe(spec) << " " << a << " " << b;
                EXPECT_EQ(order.less(a, b), expected);
                EXPECT_EQ(poset.comparable(a, b), expected || (a != b && oracle::leq(poset, b, a)));
            }
        }
        EXPECT_EQ(order.relation_count(), relations);
        EXPECT_TRUE(order.is_strict_order());
    }
}

TEST(Poset, CanonicalOrderAndLevels) {
    for (const FamilySpec& spec : small_families()) {
        RankedPoset poset = RankedPoset::build(spec);
        EXPECT_EQ(Integer(static_cast<unsigned long>(poset.size())), ground_size(spec));
        for (std::size_t i = 1; i < poset.size(); ++i) {
            EXPECT_LT(poset.element(i - 1), poset.element(i));
        }
        std::vector<Integer> sizes = level_sizes(spec);
        for (int r = 0; r <= poset.top_rank(); ++r) {
            EXPECT_EQ(Integer(static_cast<unsigned long>(poset.level_count(r))), sizes[r]);
        }
    }
}

TEST(Poset, CoversMatchFirstPrinciples) {
    for (const FamilySpec& spec : small_families()) {
        RankedPoset poset = RankedPoset::build(spec);
        for (std::size_t a = 0; a < poset.size(); ++a) {
            std::vector<std::size_t> expected;
            for (std::size_t b = 0; b < poset.size(); ++b) {
                if (poset.rank(b) == poset.rank(a) + 1 && oracle::leq(poset, a, b)) {
                    expected.push_back(b);
                }
            }
            EXPECT_EQ(poset.upper_covers(a), expected) << describe(spec);
        }
    }
}

TEST(Poset, EncodeDecodeRoundTrip) {
    for (const FamilySpec& spec : small_families()) {
        RankedPoset poset = RankedPoset::build(spec);
        for (std::size_t a = 0; a < poset.size(); ++a) {
            EXPECT_EQ(poset.decode(poset.encode(a)), a);
            EXPECT_EQ(decode(spec, encode(spec, poset.element(a))), poset.element(a));
        }
    }
    FamilySpec cube = FamilySpec::boolean_lattice(3);
    EXPECT_EQ(encode(cube, bottom_element(cube)), "000");
    EXPECT_EQ(encode(FamilySpec::subspaces(2, 2), bottom_element(FamilySpec::subspaces(2, 2))), "[]");
    EXPECT_EQ(encode(FamilySpec::boolean_lattice(0), bottom_element(FamilySpec::boolean_lattice(0))), "()");
    EXPECT_THROW(decode(cube, "0120"), ValidationError);
    EXPECT_THROW(decode(cube, "002"), ValidationError);
    EXPECT_THROW(decode(FamilySpec::subspaces(2, 2), "[11|01]"), ValidationError);
}

TEST(Poset, ExampleRelations) {
    FamilySpec grid = FamilySpec::multiset(2);
    EXPECT_EQ(compare(grid, decode(grid, "01"), decode(grid, "12")), Relation::less);
    EXPECT_EQ(compare(grid, decode(grid, "20"), decode(grid, "02")), Relation::incomparable);
    EXPECT_EQ(compare(grid, decode(grid, "22"), decode(grid, "11")), Relation::greater);
    FamilySpec plane = FamilySpec::subspaces(3, 2);
    EXPECT_EQ(compare(plane, decode(plane, "[100]"), decode(plane, "[100|010]")), Relation::less);
    EXPECT_EQ(compare(plane, decode(plane, "[001]"), decode(plane, "[100|010]")), Relation::incomparable);
    EXPECT_EQ(count_twos(decode(grid, "22")), 2);
}

TEST(Poset, CustomChain) {
    RankedPoset chain = RankedPoset::custom({0, 1, 2}, [](std::size_t a, std::size_t b) { return a < b; }, "chain3");
    EXPECT_FALSE(chain.is_family());
    EXPECT_EQ(chain.label(), "chain3");
    EXPECT_EQ(chain.top_rank(), 2);
    EXPECT_TRUE(chain.less(0, 2));
    EXPECT_EQ(chain.order().relation_count(), 3U);
    EXPECT_THROW(chain.spec(), ValidationError);
}

TEST(Poset, ResourceLimits) {
    Limits tight;
    tight.max_elements = 10;
    EXPECT_THROW(RankedPoset::build(FamilySpec::boolean_lattice(4), tight), ResourceLimitError);
    tight = Limits{};
    tight.max_closure = 8;
    EXPECT_THROW(RankedPoset::build(FamilySpec::boolean_lattice(4)).order(tight), ResourceLimitError);
}

TEST(Poset, InducedOrder) {
    RankedPoset poset = RankedPoset::build(FamilySpec::boolean_lattice(3));
    FiniteOrder sub = poset.order().induced({0, 1, 7});
    EXPECT_EQ(sub.size(), 3U);
    EXPECT_TRUE(sub.less(0, 1));
    EXPECT_TRUE(sub.less(1, 2));
    EXPECT_EQ(sub.relation_count(), 3U);
}
