#pragma once

#include "posetsat/exact.hpp"
#include "posetsat/family.hpp"
#include "posetsat/poset.hpp"
#include "posetsat/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace posetsat {

struct Stage {
    long d = 1;
    long m = 1;
};

// Degree thresholds d_1 > ... > d_k and sizes |P| > m_1 > ... > m_k. The
// premise for stage j is that every subset larger than m_j has at least
// |S| * d_j comparable pairs; certified records whether it was checked.
struct StageConfig {
    std::vector<Stage> stages;
    bool certified = false;

    std::size_t k() const { return stages.size(); }
    nlohmann::json to_json() const;
    static StageConfig from_json(const nlohmann::json& j);
};

// Throws ValidationError unless the thresholds and sizes are strictly
// decreasing, positive, and m_1 < poset_size.
void validate(const StageConfig& config, std::size_t poset_size);

// Checks the premise for one stage exactly. It suffices to look at subsets of
// size m + 1: averaging over deletions shows the bound then holds for every
// larger size. Returns a violating subset if there is one.
std::optional<std::vector<std::size_t>> premise_counterexample(const RankedPoset& poset, const Stage& stage,
                                                               const Limits& limits = {});

// For each d, the smallest m for which the premise holds (binary search on
// the exact minimum). The result is certified.
StageConfig find_certified_stages(const RankedPoset& poset, const std::vector<long>& degrees,
                                  const Limits& limits = {});

// Certifies each stage of an existing config; the report lists the stages
// whose premise fails together with a witness.
CheckReport certify_stages(const RankedPoset& poset, StageConfig& config, const Limits& limits = {});

struct TraceStep {
    std::size_t element = 0;    // u_i
    std::size_t degree = 0;     // degree of u_i inside P_i
    std::size_t remaining = 0;  // |P_i|
};

struct ContainerRun {
    std::vector<std::vector<std::size_t>> fingerprints;  // T_1..T_k, sorted
    std::vector<std::vector<std::size_t>> containers;    // f_1..f_k, sorted
    std::vector<TraceStep> trace;

    // Sorted union T_1 u ... u T_j (j is 1-based).
    std::vector<std::size_t> fingerprint_union(std::size_t j) const;
    // T_1 u ... u T_k u f_k.
    std::vector<std::size_t> container() const;
};

// Runs the multi-stage Kleitman-Winston procedure on an antichain. Stages
// that the maximum degree skips entirely get the current residue as their
// container. Throws ValidationError if I is not an antichain.
ContainerRun kw_run(const RankedPoset& poset, const FiniteOrder& order, const StageConfig& config,
                    const std::vector<std::size_t>& antichain);
ContainerRun kw_run(const RankedPoset& poset, const StageConfig& config, const std::vector<std::size_t>& antichain,
                    const Limits& limits = {});

// Audits one run: fingerprint sizes, nesting, disjointness, coverage, T inside
// I, container sizes, residual degrees and the non-increasing degree trace.
CheckReport check_run(const RankedPoset& poset, const FiniteOrder& order, const StageConfig& config,
                      const std::vector<std::size_t>& antichain, const ContainerRun& run);

struct ContainerFamily {
    std::set<std::vector<std::size_t>> containers;  // distinct, sorted
    std::uint64_t antichains = 0;
    Integer count_bound = 0;  // product of binomial sums
    Rational size_bound = 0;  // m_k + sum m_{j-1} / (2 d_j + 1)
    std::size_t largest = 0;
    CheckReport report;

    // One container per line, members space-separated in encoded form.
    std::string dump(const RankedPoset& poset) const;
};

// Runs every antichain through kw_run and audits the family: per-run checks,
// that f_j depends only on the union of the first j fingerprints, the count
// and size bounds, and that every antichain lies in a container.
ContainerFamily build_family(const RankedPoset& poset, const StageConfig& config, const Limits& limits = {});

// Exact number of antichains (including the empty one). Throws
// ResourceLimitError once the search exceeds node_budget nodes.
Integer count_antichains(const RankedPoset& poset, const Limits& limits = {},
                         std::uint64_t node_budget = std::uint64_t{1} << 31);

// Calls fn for every antichain (sorted indices), smallest index first.
void for_each_antichain(const RankedPoset& poset, const FiniteOrder& order,
                        const std::function<void(const std::vector<std::size_t>&)>& fn);

struct CountBound {
    StageConfig config;
    Integer container_count = 0;  // product of binomial sums
    Integer container_size = 0;   // floor(m_k + sum m_{j-1} / (2 d_j + 1))
    Rational log2_upper = 0;      // certified upper bound on log2(#antichains)
    nlohmann::json to_json() const;
};

CountBound count_upper_bound(std::size_t poset_size, const StageConfig& config, bool assume = false);

// Parameter choices of the counting arguments at a finite n, rounded up to
// integers. Infeasible when a denominator is not positive or the rounded
// values break the ordering.
struct StageParameters {
    FamilySpec spec;
    bool feasible = false;
    std::string reason;
    StageConfig config;
    nlohmann::json raw;  // display-only real values
    nlohmann::json to_json() const;
};

StageParameters counting_stage_parameters(const FamilySpec& spec);

}  // namespace posetsat
