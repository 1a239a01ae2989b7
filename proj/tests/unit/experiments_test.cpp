#include "posetsat/errors.hpp"
#include "posetsat/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace posetsat;

TEST(Seeds, SplitMixReference) {
    // First output of splitmix64 from state 0.
    EXPECT_EQ(mix64(0), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(derive_seed(0, 0), mix64(0x9e3779b97f4a7c15ULL));
    EXPECT_EQ(derive_seed(5, 3), mix64(5 + 4 * 0x9e3779b97f4a7c15ULL));
}

TEST(RandomSubset, ExtremeDensities) {
    EXPECT_TRUE(sample_random_subset(100, 0, 1).empty());
    auto all = sample_random_subset(100, 1, 1);
    ASSERT_EQ(all.size(), 100U);
    for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_EQ(all[i], i);
    }
    EXPECT_EQ(sample_random_subset(50, Rational(1, 3), 42), sample_random_subset(50, Rational(1, 3), 42));
    EXPECT_NE(sample_random_subset(50, Rational(1, 3), 42), sample_random_subset(50, Rational(1, 3), 43));
}

TEST(RandomSubset, MeanSizeWithinThreeSigma) {
    const int trials = 10000;
    double total = 0;
    for (int t = 0; t < trials; ++t) {
        total += static_cast<double>(sample_random_subset(16, Rational(1, 2), derive_seed(9, t)).size());
    }
    double sigma = std::sqrt(16 * 0.25 / trials);
    EXPECT_NEAR(total / trials, 8.0, 3 * sigma);
}

TEST(DensityScale, Families) {
    EXPECT_EQ(density_scale(FamilySpec::boolean_lattice(7)), 7);
    EXPECT_EQ(density_scale(FamilySpec::multiset(5)), 5);
    EXPECT_EQ(density_scale(FamilySpec::subspaces(4, 3)), 9);
    double odd = to_double(density_scale(FamilySpec::subspaces(3, 2)));
    EXPECT_LE(odd, 2 * std::sqrt(2.0));
    EXPECT_NEAR(odd, 2 * std::sqrt(2.0), 1e-10);
}

TEST(Chernoff, Examples) {
    EXPECT_NEAR(chernoff_bound(Rational(1, 2), 12), std::exp(-1.0), 1e-12);
    EXPECT_NEAR(chernoff_bound(3, 1), std::exp(-1.0), 1e-12);
}

TEST(Experiment, FullDensityIsDeterministic) {
    RandomSubsetSpec spec;
    spec.family = FamilySpec::boolean_lattice(4);
    spec.p = Rational(1);
    spec.trials = 5;
    ExperimentReport report = run_threshold_experiment(spec);
    EXPECT_EQ(report.poset_size, 16U);
    EXPECT_EQ(report.poset_width, 6);
    for (const TrialOutcome& t : report.trials) {
        EXPECT_EQ(t.size, 16U);
        EXPECT_EQ(t.width, 6U);
    }
    EXPECT_EQ(report.exceed_count, 0);
    EXPECT_EQ(report.csv().substr(0, 25), "trial,size,max_antichain\n");
    spec.p = Rational(0);
    for (const TrialOutcome& t : run_threshold_experiment(spec).trials) {
        EXPECT_EQ(t.size, 0U);
        EXPECT_EQ(t.width, 0U);
    }
}

TEST(Experiment, WorkersDoNotChangeResults) {
    RandomSubsetSpec spec;
    spec.family = FamilySpec::multiset(3);
    spec.c = 2;
    spec.trials = 40;
    spec.master_seed = 11;
    ExperimentReport one = run_threshold_experiment(spec);
    spec.workers = 4;
    ExperimentReport four = run_threshold_experiment(spec);
    EXPECT_EQ(one.csv(), four.csv());
    EXPECT_EQ(one.p, Rational(2, 3));
}

TEST(Experiment, Validation) {
    RandomSubsetSpec spec;
    spec.family = FamilySpec::boolean_lattice(4);
    spec.trials = 0;
    EXPECT_THROW(validate(spec), ValidationError);
    spec.trials = 1;
    spec.p = Rational(3, 2);
    EXPECT_THROW(validate(spec), ValidationError);
    spec.p.reset();
    spec.family = FamilySpec::boolean_lattice(20);
    EXPECT_THROW(validate(spec), ResourceLimitError);
}
