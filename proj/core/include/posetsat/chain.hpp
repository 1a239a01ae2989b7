#pragma once

#include "posetsat/element.hpp"
#include "posetsat/exact.hpp"
#include "posetsat/family.hpp"
#include "posetsat/poset.hpp"
#include "posetsat/weights.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace posetsat {

using Step = std::pair<ElementCode, Rational>;

// A probability distribution on maximal chains that is generated one level
// at a time: the next element depends only on the current one.
class ChainDistribution {
public:
    virtual ~ChainDistribution() = default;

    virtual std::string kind() const = 0;
    virtual int top_rank() const = 0;
    virtual std::string encode(const ElementCode& x) const = 0;

    // Distribution of the lowest chain element.
    virtual std::vector<Step> start_steps() const = 0;
    // Covers of x with their transition probabilities (zero entries omitted).
    virtual std::vector<Step> next_steps(const ElementCode& x) const = 0;

    // Probability of moving from x to the cover y; throws ValidationError if
    // y does not cover x.
    virtual Rational transition(const ElementCode& x, const ElementCode& y) const;
    virtual Rational element_probability(const ElementCode& x) const = 0;
    // P(y in C | x in C) for comparable x, y (either direction); 1 when x == y.
    virtual Rational conditional(const ElementCode& x, const ElementCode& y) const = 0;
};

// The distribution mu on {0,1,2}^n defined by the weight table.
class MuDistribution final : public ChainDistribution {
public:
    explicit MuDistribution(int n);

    int n() const { return n_; }
    const WeightTable& weights() const { return table_; }
    const FamilySpec& spec() const { return spec_; }

    std::string kind() const override { return "mu_multiset"; }
    int top_rank() const override { return 2 * n_; }
    std::string encode(const ElementCode& x) const override;
    std::vector<Step> start_steps() const override;
    std::vector<Step> next_steps(const ElementCode& x) const override;
    Rational transition(const ElementCode& x, const ElementCode& y) const override;
    Rational element_probability(const ElementCode& x) const override;
    Rational conditional(const ElementCode& x, const ElementCode& y) const override;

    // Probability that the chain passes through a fixed element of slice s
    // of level i, from the slice-indexed forward recursion.
    const Rational& slice_probability(int i, int s) const;

    // P(y | x) for x < y where x lies in level i with s twos, and y is
    // obtained from x by raising n01 coordinates 0->1, n02 coordinates 0->2
    // and n12 coordinates 1->2.
    Rational upward_conditional(int i, int s, int n01, int n02, int n12) const;

private:
    int n_;
    FamilySpec spec_;
    WeightTable table_;
    std::vector<std::vector<Rational>> slice_prob_;
};

// Uniformly random maximal chain of P(n) or V(q,n), with closed forms.
class UniformMaximalChains final : public ChainDistribution {
public:
    explicit UniformMaximalChains(const FamilySpec& spec);

    std::string kind() const override { return "uniform_maximal"; }
    int top_rank() const override { return spec_.n; }
    std::string encode(const ElementCode& x) const override;
    std::vector<Step> start_steps() const override;
    std::vector<Step> next_steps(const ElementCode& x) const override;
    Rational transition(const ElementCode& x, const ElementCode& y) const override;
    Rational element_probability(const ElementCode& x) const override;
    Rational conditional(const ElementCode& x, const ElementCode& y) const override;

private:
    // Number of (j-i)-dimensional steps: C(n-i, j-i) or its q-analogue.
    Integer ways(int i, int j) const;

    FamilySpec spec_;
};

// Chain distribution on a materialized poset given by explicit transition
// probabilities along covers; probabilities come from forward recursion.
class ExplicitChainDistribution final : public ChainDistribution {
public:
    // start[i] for each element of level 0; transitions[i][k] for the k-th
    // upper cover of element i. Each non-maximal element's row must sum to 1.
    ExplicitChainDistribution(std::shared_ptr<const RankedPoset> poset, std::string kind, std::vector<Rational> start,
                              std::vector<std::vector<Rational>> transitions);

    const RankedPoset& poset() const { return *poset_; }

    std::string kind() const override { return kind_; }
    int top_rank() const override { return poset_->top_rank(); }
    std::string encode(const ElementCode& x) const override;
    std::vector<Step> start_steps() const override;
    std::vector<Step> next_steps(const ElementCode& x) const override;
    Rational transition(const ElementCode& x, const ElementCode& y) const override;
    Rational element_probability(const ElementCode& x) const override;
    Rational conditional(const ElementCode& x, const ElementCode& y) const override;

    const Rational& probability_at(std::size_t index) const { return prob_[index]; }
    // P(element b | element a) for a below b, by forward recursion from a.
    Rational upward_conditional(std::size_t a, std::size_t b) const;

private:
    std::shared_ptr<const RankedPoset> poset_;
    std::string kind_;
    std::vector<Rational> start_;
    std::vector<std::vector<Rational>> transitions_;
    std::vector<Rational> prob_;
};

// Uniformly random maximal chain of any materialized ranked poset: the
// chain moves to a cover with probability proportional to the number of
// maximal chains above that cover.
std::shared_ptr<ExplicitChainDistribution> uniform_maximal_chains(std::shared_ptr<const RankedPoset> poset);

// mu on a materialized {0,1,2}^n, with per-element transitions taken from the
// weight table. Used to cross-check the slice recursion element by element.
std::shared_ptr<ExplicitChainDistribution> explicit_mu(std::shared_ptr<const RankedPoset> poset);

// The natural chain distribution for a family: uniform maximal chains for
// P(n) and V(q,n), mu for {0,1,2}^n, uniform maximal chains otherwise.
std::shared_ptr<const ChainDistribution> default_distribution(std::shared_ptr<const RankedPoset> poset);

// Draws a maximal chain, lowest element first. Deterministic for a given
// seed (mt19937_64).
std::vector<ElementCode> sample_chain(const ChainDistribution& dist, std::uint64_t seed);

// Every maximal chain with positive probability, with its probability.
// Throws ResourceLimitError beyond max_chains chains.
std::vector<std::pair<std::vector<ElementCode>, Rational>> enumerate_chains(const ChainDistribution& dist,
                                                                            std::size_t max_chains = 1'000'000);

}  // namespace posetsat
