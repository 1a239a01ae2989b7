#pragma once

#include "posetsat/exact.hpp"
#include "posetsat/family.hpp"
#include "posetsat/poset.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posetsat {

// One splitmix64 step: the output of a splitmix64 generator whose state is x.
std::uint64_t mix64(std::uint64_t x);

// Seed of trial t: mix64(master + (t + 1) * 0x9e3779b97f4a7c15).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial);

// Keeps each element independently with probability p using mt19937_64 seeded
// with seed: element x is kept when its draw u satisfies u < ceil(p * 2^64)
// (every element when p = 1). Result sorted.
std::vector<std::size_t> sample_random_subset(std::size_t size, const Rational& p, std::uint64_t seed);

// Density scale of the random-subset statements: q^(n/2) for subspaces and n
// otherwise. q^(n/2) for odd n is rounded down to a rational with 2^-40
// precision.
Rational density_scale(const FamilySpec& spec);

struct RandomSubsetSpec {
    FamilySpec family;
    std::optional<Rational> p;  // explicit density
    Rational c = 1;             // p = min(1, c / density_scale) when p is absent
    Rational epsilon = Rational(1, 2);
    long trials = 100;
    std::uint64_t master_seed = 0;
    unsigned workers = 1;

    Rational density() const;
    nlohmann::json to_json() const;
};

// Throws ValidationError or ResourceLimitError on invalid or oversized input.
void validate(const RandomSubsetSpec& spec);

struct TrialOutcome {
    std::size_t size = 0;
    std::size_t width = 0;
    std::size_t construction = 0;  // middle level in A_p plus uncovered elements one level up
};

struct ExperimentReport {
    RandomSubsetSpec spec;
    Rational p = 0;
    Integer poset_width = 0;
    std::size_t poset_size = 0;
    std::vector<TrialOutcome> trials;
    long exceed_count = 0;               // width > (1 + eps) p W
    long construction_exceed_count = 0;  // construction > p W
    double chernoff_ref = 0;

    double exceedance() const;
    double construction_exceedance() const;
    double mean_size() const;
    nlohmann::json to_json() const;
    std::string csv() const;  // trial,size,max_antichain
};

ExperimentReport run_threshold_experiment(const RandomSubsetSpec& spec);

// One report per c, with p = min(1, c / density_scale).
std::vector<ExperimentReport> run_threshold_sweep(RandomSubsetSpec spec, const std::vector<Rational>& cs);

// exp(-delta^2 E / 3) for 0 < delta < 1, exp(-delta E / 3) otherwise.
double chernoff_bound(const Rational& delta, const Rational& expectation);

}  // namespace posetsat
