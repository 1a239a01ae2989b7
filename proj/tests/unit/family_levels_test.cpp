#include "posetsat/errors.hpp"
#include "posetsat/family.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/poset.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace posetsat;

namespace {

std::vector<Integer> counted_levels(const FamilySpec& spec) {
    RankedPoset poset = RankedPoset::build(spec);
    std::vector<Integer> out(spec.top_rank() + 1, 0);
    for (std::size_t x = 0; x < poset.size(); ++x) {
        out[poset.rank(x)] += 1;
    }
    return out;
}

}  // namespace

TEST(Family, Validation) {
    EXPECT_NO_THROW(validate(FamilySpec::boolean_lattice(0)));
    EXPECT_THROW(validate(FamilySpec::subspaces(3, 6)), ValidationError);
    EXPECT_THROW(validate(FamilySpec::subspaces(3, 1)), ValidationError);
    EXPECT_THROW(validate(FamilySpec::grid(3, 0)), ValidationError);
    EXPECT_THROW(validate(FamilySpec::boolean_lattice(-1)), ValidationError);
    EXPECT_TRUE(is_prime_power(9));
    EXPECT_TRUE(is_prime_power(32));
    EXPECT_FALSE(is_prime_power(12));
}

TEST(Family, JsonRoundTrip) {
    for (const FamilySpec& spec : {FamilySpec::boolean_lattice(4), FamilySpec::subspaces(3, 2), FamilySpec::grid(2, 3)}) {
        EXPECT_EQ(family_from_json(to_json(spec)), spec);
    }
    EXPECT_EQ(to_json(FamilySpec::boolean_lattice(4)).dump(), R"({"family":"boolean","n":4})");
    EXPECT_EQ(describe(FamilySpec::subspaces(3, 2)), "V(2,3)");
}

TEST(Levels, BuildExamples) {
    EXPECT_EQ(counted_levels(FamilySpec::boolean_lattice(2)), (std::vector<Integer>{1, 2, 1}));
    EXPECT_EQ(counted_levels(FamilySpec::multiset(2)), (std::vector<Integer>{1, 2, 3, 2, 1}));
    EXPECT_EQ(counted_levels(FamilySpec::subspaces(3, 2)), (std::vector<Integer>{1, 7, 7, 1}));
}

TEST(Levels, ClosedFormsMatchEnumeration) {
    std::vector<FamilySpec> specs;
    for (int n = 0; n <= 8; ++n) {
        specs.push_back(FamilySpec::boolean_lattice(n));
    }
    for (int n = 0; n <= 5; ++n) {
        specs.push_back(FamilySpec::multiset(n));
        specs.push_back(FamilySpec::grid(n, 3));
    }
    for (int n = 0; n <= 4; ++n) {
        specs.push_back(FamilySpec::subspaces(n, 2));
        specs.push_back(FamilySpec::subspaces(n, 3));
    }
    specs.push_back(FamilySpec::subspaces(3, 4));
    specs.push_back(FamilySpec::subspaces(3, 5));
    for (const FamilySpec& spec : specs) {
        std::vector<Integer> counted = counted_levels(spec);
        EXPECT_EQ(level_sizes(spec), counted) << describe(spec);
        Integer total = 0;
        for (const Integer& v : counted) {
            total += v;
        }
        EXPECT_EQ(total, ground_size(spec)) << describe(spec);
        for (std::size_t i = 0; i < counted.size(); ++i) {
            EXPECT_EQ(counted[i], counted[counted.size() - 1 - i]);
        }
    }
}

TEST(Levels, GaussianBinomialExamples) {
    EXPECT_EQ(gaussian_binomial(5, 0, 3), 1);
    EXPECT_EQ(gaussian_binomial(3, 1, 2), 7);
    EXPECT_EQ(gaussian_binomial(4, 2, 2), 35);
    EXPECT_EQ(galois_number(3, 2), 16);
}

TEST(Levels, GaussianBinomialUnimodal) {
    for (long q : {2L, 3L, 4L, 5L}) {
        for (long n = 1; n <= 60; ++n) {
            for (long i = 0; i < n; ++i) {
                bool rising = 2 * i < n;
                if (rising) {
                    EXPECT_LE(gaussian_binomial(n, i, q), gaussian_binomial(n, i + 1, q));
                } else {
                    EXPECT_GE(gaussian_binomial(n, i, q), gaussian_binomial(n, i + 1, q));
                }
            }
        }
    }
}

TEST(Levels, MultisetLevelExamples) {
    EXPECT_EQ(multiset_level(7, 0), 1);
    EXPECT_EQ(multiset_level(3, 3), 7);
    EXPECT_EQ(multiset_level(2, 2), 3);
    std::vector<long> five = {1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1};
    for (long i = 0; i <= 10; ++i) {
        EXPECT_EQ(multiset_level(5, i), five[i]);
    }
}

TEST(Levels, SlicesMatchEnumeration) {
    EXPECT_EQ(level_slice_size(2, 2, 1), 2);
    EXPECT_EQ(level_slice_size(6, 0, 0), 1);
    EXPECT_EQ(level_slice_size(3, 3, 0), 1);
    for (int n = 1; n <= 5; ++n) {
        RankedPoset poset = RankedPoset::build(FamilySpec::multiset(n));
        std::map<std::pair<int, int>, long> counted;
        for (std::size_t x = 0; x < poset.size(); ++x) {
            int twos = 0;
            for (auto d : poset.element(x).payload) {
                twos += d == 2;
            }
            ++counted[{poset.rank(x), twos}];
        }
        LevelProfile profile(FamilySpec::multiset(n));
        for (int i = 0; i <= 2 * n; ++i) {
            Integer sum = 0;
            for (int s = 0; s <= 2 * n; ++s) {
                long expected = counted.count({i, s}) ? counted[{i, s}] : 0;
                EXPECT_EQ(level_slice_size(n, i, s), expected) << n << " " << i << " " << s;
                EXPECT_EQ(level_slice_size(n, i, s) > 0, std::max(0, i - n) <= s && 2 * s <= i);
                sum += level_slice_size(n, i, s);
            }
            EXPECT_EQ(sum, profile.size(i));
        }
    }
}

TEST(Levels, ProfileCsv) {
    EXPECT_EQ(LevelProfile(FamilySpec::multiset(1)).csv(), "i,size\n0,1\n1,1\n2,1\n");
}
