#include "posetsat/containers.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/supersat.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace posetsat {

nlohmann::json StageConfig::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const Stage& s : stages) {
        list.push_back({{"d", s.d}, {"m", s.m}});
    }
    return {{"stages", list}, {"certified", certified}};
}

StageConfig StageConfig::from_json(const nlohmann::json& j) {
    StageConfig config;
    try {
        for (const auto& entry : j.at("stages")) {
            config.stages.push_back({entry.at("d").get<long>(), entry.at("m").get<long>()});
        }
        if (j.contains("certified")) {
            config.certified = j.at("certified").get<bool>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed stage config: ") + e.what());
    }
    return config;
}

void validate(const StageConfig& config, std::size_t poset_size) {
    if (config.stages.empty()) {
        throw ValidationError("a stage config needs at least one stage");
    }
    long previous_d = 0;
    long previous_m = static_cast<long>(poset_size);
    for (std::size_t j = 0; j < config.stages.size(); ++j) {
        const Stage& s = config.stages[j];
        if (s.d < 1 || s.m < 1) {
            throw ValidationError("stage " + std::to_string(j + 1) + ": d and m must be positive");
        }
        if (j > 0 && s.d >= previous_d) {
            throw ValidationError("stage thresholds d must be strictly decreasing");
        }
        if (s.m >= previous_m) {
            throw ValidationError("stage sizes must satisfy |P| > m_1 > ... > m_k");
        }
        previous_d = s.d;
        previous_m = s.m;
    }
}

// ---------------------------------------------------------------------------

std::optional<std::vector<std::size_t>> premise_counterexample(const RankedPoset& poset, const Stage& stage,
                                                               const Limits& limits) {
    const long size = stage.m + 1;
    if (size > static_cast<long>(poset.size())) {
        return std::nullopt;
    }
    auto hit = find_subset_below(poset, size, Integer(size) * stage.d, limits);
    if (!hit) {
        return std::nullopt;
    }
    return hit->members;
}

StageConfig find_certified_stages(const RankedPoset& poset, const std::vector<long>& degrees, const Limits& limits) {
    const long total = static_cast<long>(poset.size());
    if (total < 2) {
        throw ValidationError("stage search needs at least two elements");
    }
    std::vector<MinCompResult> profile;
    if (total <= 40 && (std::uint64_t{1} << total) <= limits.max_subsets) {
        profile = min_comp_profile(poset, limits);
    }
    auto holds = [&](long d, long m) {
        long size = m + 1;
        if (size > total) {
            return true;
        }
        if (!profile.empty()) {
            return profile[size].min >= Integer(size) * d;
        }
        return !premise_counterexample(poset, {d, m}, limits).has_value();
    };
    StageConfig config;
    for (long d : degrees) {
        if (d < 1) {
            throw ValidationError("degree thresholds must be positive");
        }
        if (!holds(d, total - 1)) {
            throw ValidationError("no m below |P| satisfies the premise for d = " + std::to_string(d));
        }
        long lo = 1;
        long hi = total - 1;
        while (lo < hi) {
            long mid = lo + (hi - lo) / 2;
            if (holds(d, mid)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        config.stages.push_back({d, lo});
    }
    validate(config, poset.size());
    config.certified = true;
    return config;
}

CheckReport certify_stages(const RankedPoset& poset, StageConfig& config, const Limits& limits) {
    validate(config, poset.size());
    CheckReport report;
    report.check = "stage_premises";
    report.n = poset.is_family() ? poset.spec().n : 0;
    for (std::size_t j = 0; j < config.k(); ++j) {
        const Stage& s = config.stages[j];
        if (auto bad = premise_counterexample(poset, s, limits)) {
            std::ostringstream msg;
            msg << "stage " << j + 1 << " (d=" << s.d << ", m=" << s.m << "): subset of size " << bad->size()
                << " has comp " << comp(poset, *bad) << " < " << Integer(s.m + 1) * s.d;
            report.violations.push_back(msg.str());
        }
    }
    config.certified = report.passed();
    report.details["stages"] = config.to_json();
    return report;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> sorted_union(const std::vector<std::vector<std::size_t>>& sets, std::size_t count) {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < count && j < sets.size(); ++j) {
        out.insert(out.end(), sets[j].begin(), sets[j].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool contains_sorted(const std::vector<std::size_t>& haystack, std::size_t x) {
    return std::binary_search(haystack.begin(), haystack.end(), x);
}

void check_antichain(const RankedPoset& poset, const FiniteOrder& order, const std::vector<std::size_t>& antichain) {
    for (std::size_t a = 0; a < antichain.size(); ++a) {
        if (antichain[a] >= order.size()) {
            throw ValidationError("antichain member out of range");
        }
        for (std::size_t b = a + 1; b < antichain.size(); ++b) {
            if (antichain[a] == antichain[b] || order.comparable(antichain[a], antichain[b])) {
                throw ValidationError("not an antichain: " + poset.encode(antichain[a]) + " and " +
                                      poset.encode(antichain[b]));
            }
        }
    }
}

}  // namespace

std::vector<std::size_t> ContainerRun::fingerprint_union(std::size_t j) const {
    return sorted_union(fingerprints, j);
}

std::vector<std::size_t> ContainerRun::container() const {
    std::vector<std::size_t> out = fingerprint_union(fingerprints.size());
    if (!containers.empty()) {
        out.insert(out.end(), containers.back().begin(), containers.back().end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

ContainerRun kw_run(const RankedPoset& poset, const FiniteOrder& order, const StageConfig& config,
                    const std::vector<std::size_t>& antichain) {
    validate(config, order.size());
    check_antichain(poset, order, antichain);
    const std::size_t n = order.size();
    const std::size_t k = config.k();
    Bitset in_antichain(n);
    for (std::size_t x : antichain) {
        in_antichain.set(x);
    }
    Bitset alive(n);
    alive.set();
    std::size_t alive_count = n;
    std::vector<std::size_t> degree(n);
    for (std::size_t x = 0; x < n; ++x) {
        degree[x] = order.degree(x);
    }
    auto remove = [&](std::size_t v) {
        alive.reset(v);
        --alive_count;
        Bitset touched = order.comparable_set(v) & alive;
        for (std::size_t w = touched.find_first(); w != Bitset::npos; w = touched.find_next(w)) {
            --degree[w];
        }
    };
    auto pick = [&]() {
        std::size_t best = Bitset::npos;
        for (std::size_t x = alive.find_first(); x != Bitset::npos; x = alive.find_next(x)) {
            if (best == Bitset::npos || degree[x] > degree[best]) {
                best = x;
            }
        }
        return best;
    };
    auto alive_members = [&]() {
        std::vector<std::size_t> out;
        for (std::size_t x = alive.find_first(); x != Bitset::npos; x = alive.find_next(x)) {
            out.push_back(x);
        }
        return out;
    };
    auto threshold = [&](std::size_t j) { return static_cast<std::size_t>(2 * config.stages[j].d); };

    ContainerRun run;
    run.fingerprints.assign(k, {});
    run.containers.assign(k, {});
    std::size_t next = 0;  // first stage whose container is not yet fixed

    std::size_t u = pick();
    run.trace.push_back({u, degree[u], alive_count});
    auto finalize_below = [&](std::size_t d) {
        while (next < k && d < threshold(next)) {
            run.containers[next++] = alive_members();
        }
    };
    finalize_below(degree[u]);
    while (next < k) {
        std::size_t j = next;
        const std::size_t d = degree[u];
        if (d < threshold(k - 1)) {
            break;
        }
        if (!in_antichain.test(u)) {
            remove(u);
        } else {
            run.fingerprints[j].push_back(u);
            Bitset neighbours = order.comparable_set(u) & alive;
            remove(u);
            for (std::size_t w = neighbours.find_first(); w != Bitset::npos; w = neighbours.find_next(w)) {
                remove(w);
            }
        }
        if (alive_count == 0) {
            while (next < k) {
                run.containers[next++] = {};
            }
            break;
        }
        u = pick();
        run.trace.push_back({u, degree[u], alive_count});
        finalize_below(degree[u]);
    }
    for (auto& t : run.fingerprints) {
        std::sort(t.begin(), t.end());
    }
    return run;
}

ContainerRun kw_run(const RankedPoset& poset, const StageConfig& config, const std::vector<std::size_t>& antichain,
                    const Limits& limits) {
    return kw_run(poset, poset.order(limits), config, antichain);
}

CheckReport check_run(const RankedPoset& poset, const FiniteOrder& order, const StageConfig& config,
                      const std::vector<std::size_t>& antichain, const ContainerRun& run) {
    CheckReport report;
    report.check = "container_run";
    report.n = poset.is_family() ? poset.spec().n : 0;
    const std::size_t k = config.k();
    auto fail = [&](const std::string& what) { report.violations.push_back(what); };
    if (run.fingerprints.size() != k || run.containers.size() != k) {
        fail("run has the wrong number of stages");
        return report;
    }
    std::vector<std::size_t> independent(antichain.begin(), antichain.end());
    std::sort(independent.begin(), independent.end());
    std::vector<std::size_t> all = sorted_union(run.fingerprints, k);
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        fail("fingerprints are not disjoint");
    }
    for (std::size_t j = 0; j < k; ++j) {
        const Stage& s = config.stages[j];
        const long previous_m = j == 0 ? static_cast<long>(order.size()) : config.stages[j - 1].m;
        const auto& t = run.fingerprints[j];
        const auto& f = run.containers[j];
        const std::string tag = "stage " + std::to_string(j + 1) + ": ";
        if (Integer(t.size()) * (2 * s.d + 1) > previous_m) {
            fail(tag + "|T| = " + std::to_string(t.size()) + " exceeds m/(2d+1)");
        }
        for (std::size_t x : t) {
            if (!contains_sorted(independent, x)) {
                fail(tag + poset.encode(x) + " is in T but not in I");
            }
            if (j > 0 && !contains_sorted(run.containers[j - 1], x)) {
                fail(tag + poset.encode(x) + " is in T but not in the previous container");
            }
        }
        for (std::size_t x : sorted_union(run.fingerprints, j + 1)) {
            if (contains_sorted(f, x)) {
                fail(tag + "fingerprint element " + poset.encode(x) + " lies in its container");
            }
        }
        if (static_cast<long>(f.size()) > s.m) {
            fail(tag + "container has " + std::to_string(f.size()) + " elements, more than m = " +
                 std::to_string(s.m));
        }
        for (std::size_t x : f) {
            long inside = 0;
            for (std::size_t y : f) {
                inside += order.comparable(x, y);
            }
            if (inside >= 2 * s.d) {
                fail(tag + poset.encode(x) + " has " + std::to_string(inside) + " comparable elements in its container");
            }
        }
    }
    std::vector<std::size_t> cover = run.container();
    for (std::size_t x : independent) {
        if (!contains_sorted(cover, x)) {
            fail(poset.encode(x) + " is in I but not covered");
        }
    }
    for (std::size_t i = 1; i < run.trace.size(); ++i) {
        if (run.trace[i].degree > run.trace[i - 1].degree) {
            fail("degree trace increases at step " + std::to_string(i));
        }
        if (run.trace[i].remaining >= run.trace[i - 1].remaining) {
            fail("residue does not shrink at step " + std::to_string(i));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

namespace {

void antichain_search(const FiniteOrder& order, const Bitset& candidates, std::vector<std::size_t>& current,
                      const std::function<void(const std::vector<std::size_t>&)>& fn) {
    fn(current);
    for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
        Bitset rest = candidates - order.comparable_set(v);
        rest.reset(v);
        // only elements after v keep the enumeration duplicate-free
        for (std::size_t w = rest.find_first(); w != Bitset::npos && w < v; w = rest.find_next(w)) {
            rest.reset(w);
        }
        current.push_back(v);
        antichain_search(order, rest, current, fn);
        current.pop_back();
    }
}

std::uint64_t count_masked(const std::vector<std::uint64_t>& adj, std::uint64_t candidates, std::uint64_t& nodes,
                           std::uint64_t budget) {
    if (++nodes > budget) {
        throw ResourceLimitError("antichain count exceeds the search budget");
    }
    if (candidates == 0) {
        return 1;
    }
    const int v = std::countr_zero(candidates);
    const std::uint64_t without = candidates & (candidates - 1);
    return count_masked(adj, without, nodes, budget) + count_masked(adj, without & ~adj[v], nodes, budget);
}

Integer count_bitset(const FiniteOrder& order, const Bitset& candidates, std::uint64_t& nodes, std::uint64_t budget) {
    if (++nodes > budget) {
        throw ResourceLimitError("antichain count exceeds the search budget");
    }
    const std::size_t v = candidates.find_first();
    if (v == Bitset::npos) {
        return 1;
    }
    Bitset without = candidates;
    without.reset(v);
    return count_bitset(order, without, nodes, budget) +
           count_bitset(order, without - order.comparable_set(v), nodes, budget);
}

}  // namespace

void for_each_antichain(const RankedPoset& poset, const FiniteOrder& order,
                        const std::function<void(const std::vector<std::size_t>&)>& fn) {
    (void)poset;
    Bitset all(order.size());
    all.set();
    std::vector<std::size_t> current;
    antichain_search(order, all, current, fn);
}

Integer count_antichains(const RankedPoset& poset, const Limits& limits, std::uint64_t node_budget) {
    FiniteOrder order = poset.order(limits);
    std::uint64_t nodes = 0;
    if (order.size() <= 64) {
        std::vector<std::uint64_t> adj = order.comparability_masks();
        std::uint64_t all = order.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order.size()) - 1;
        std::uint64_t count = count_masked(adj, all, nodes, node_budget);
        return Integer(std::to_string(count));
    }
    Bitset all(order.size());
    all.set();
    return count_bitset(order, all, nodes, node_budget);
}

// ---------------------------------------------------------------------------

std::string ContainerFamily::dump(const RankedPoset& poset) const {
    std::string out;
    for (const auto& container : containers) {
        for (std::size_t i = 0; i < container.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += poset.encode(container[i]);
        }
        out += '\n';
    }
    return out;
}

namespace {

Integer family_count_bound(std::size_t poset_size, const StageConfig& config) {
    Integer product = 1;
    long previous = static_cast<long>(poset_size);
    for (const Stage& s : config.stages) {
        product *= binomial_at_most(previous, previous / (2 * s.d + 1));
        previous = s.m;
    }
    return product;
}

Rational family_size_bound(std::size_t poset_size, const StageConfig& config) {
    Rational total = config.stages.back().m;
    long previous = static_cast<long>(poset_size);
    for (const Stage& s : config.stages) {
        total += Rational(previous, 2 * s.d + 1);
        previous = s.m;
    }
    total.canonicalize();
    return total;
}

}  // namespace

ContainerFamily build_family(const RankedPoset& poset, const StageConfig& config, const Limits& limits) {
    validate(config, poset.size());
    FiniteOrder order = poset.order(limits);
    ContainerFamily family;
    family.count_bound = family_count_bound(poset.size(), config);
    family.size_bound = family_size_bound(poset.size(), config);
    CheckReport& report = family.report;
    report.check = "container_family";
    report.n = poset.is_family() ? poset.spec().n : 0;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::size_t>> seen;
    std::uint64_t collisions_checked = 0;
    std::size_t failed_runs = 0;
    for_each_antichain(poset, order, [&](const std::vector<std::size_t>& antichain) {
        if (++family.antichains > limits.max_subsets) {
            throw ResourceLimitError("too many antichains to build the container family");
        }
        ContainerRun run = kw_run(poset, order, config, antichain);
        CheckReport audit = check_run(poset, order, config, antichain, run);
        if (!audit.passed()) {
            if (++failed_runs <= 20) {
                report.violations.push_back("run on {" + std::to_string(antichain.size()) +
                                            " elements}: " + audit.violations.front());
            }
        }
        for (std::size_t j = 0; j < config.k(); ++j) {
            auto key = std::make_pair(j, run.fingerprint_union(j + 1));
            auto [it, inserted] = seen.emplace(std::move(key), run.containers[j]);
            ++collisions_checked;
            if (!inserted && it->second != run.containers[j]) {
                report.violations.push_back("stage " + std::to_string(j + 1) +
                                            ": equal fingerprint unions give different containers");
            }
        }
        std::vector<std::size_t> container = run.container();
        if (!std::includes(container.begin(), container.end(), antichain.begin(), antichain.end())) {
            report.violations.push_back("an antichain is not inside its container");
        }
        family.largest = std::max(family.largest, container.size());
        family.containers.insert(std::move(container));
    });
    if (Integer(family.containers.size()) > family.count_bound) {
        report.violations.push_back("family has " + std::to_string(family.containers.size()) +
                                    " containers, above the bound " + to_string(family.count_bound));
    }
    if (Rational(family.largest) > family.size_bound) {
        report.violations.push_back("a container has " + std::to_string(family.largest) +
                                    " elements, above the bound " + fraction_string(family.size_bound));
    }
    report.details["antichains"] = family.antichains;
    report.details["containers"] = family.containers.size();
    report.details["count_bound"] = to_string(family.count_bound);
    report.details["size_bound"] = fraction_string(family.size_bound);
    report.details["largest_container"] = family.largest;
    report.details["failed_runs"] = failed_runs;
    report.details["fingerprint_keys"] = seen.size();
    report.details["stages"] = config.to_json();
    if (!config.certified) {
        report.notes.push_back("stage premises are assumed, not certified");
    }
    (void)collisions_checked;
    return family;
}

// ---------------------------------------------------------------------------

nlohmann::json CountBound::to_json() const {
    return {{"params", config.to_json()},
            {"container_count", to_string(container_count)},
            {"container_size", to_string(container_size)},
            {"log2_upper", fraction_string(log2_upper)}};
}

CountBound count_upper_bound(std::size_t poset_size, const StageConfig& config, bool assume) {
    validate(config, poset_size);
    if (!config.certified && !assume) {
        throw ValidationError("stage premises are not certified; pass the assume flag to use them anyway");
    }
    CountBound out;
    out.config = config;
    out.container_count = family_count_bound(poset_size, config);
    out.container_size = floor(family_size_bound(poset_size, config));
    out.log2_upper = log2_upper(out.container_count) + Rational(out.container_size);
    out.log2_upper.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------

nlohmann::json StageParameters::to_json() const {
    nlohmann::json j;
    j["spec"] = posetsat::to_json(spec);
    j["feasible"] = feasible;
    if (!reason.empty()) {
        j["reason"] = reason;
    }
    if (feasible) {
        j["stages"] = config.to_json();
    }
    j["raw_approx"] = raw;
    return j;
}

StageParameters counting_stage_parameters(const FamilySpec& spec) {
    validate(spec);
    StageParameters out;
    out.spec = spec;
    const double n = spec.n;
    const double total = to_double(Rational(LevelProfile(spec).total()));
    std::vector<double> d;
    std::vector<double> m;
    switch (spec.family) {
        case Family::boolean: {
            double width = to_double(Rational(binomial(spec.n, spec.n / 2)));
            double ln = std::log(n);
            d = {n * std::sqrt(ln), std::sqrt(n * ln)};
            m = {2 * width / (1 - 8 * d[0] / (n * n)), width / (1 - 2 * d[1] / n)};
            if (1 - 8 * d[0] / (n * n) <= 0 || 1 - 2 * d[1] / n <= 0) {
                out.reason = "parameters infeasible at this n: a denominator is not positive";
            }
            break;
        }
        case Family::subspace: {
            double q = spec.q;
            double width = to_double(Rational(gaussian_binomial(spec.n, spec.n / 2, spec.q)));
            double line = to_double(Rational(gaussian_binomial((spec.n + 2) / 2, 1, spec.q)));
            d = {std::sqrt(n) * std::pow(q, n / 4)};
            m = {width / (1 - d[0] / line)};
            if (1 - d[0] / line <= 0) {
                out.reason = "parameters infeasible at this n: a denominator is not positive";
            }
            break;
        }
        case Family::rpower: {
            if (spec.r != 2) {
                throw ValidationError("counting parameters are defined for {0,1,2}^n only");
            }
            double width = to_double(Rational(multiset_level(spec.n, spec.n)));
            double ln = std::log(n);
            d = {n * std::sqrt(ln), std::sqrt(n * ln)};
            m = {2 * width / (1 - 50 * d[0] / (n * n)), width / (1 - 4 * d[1] / n)};
            if (1 - 50 * d[0] / (n * n) <= 0 || 1 - 4 * d[1] / n <= 0) {
                out.reason = "parameters infeasible at this n: a denominator is not positive";
            }
            break;
        }
    }
    nlohmann::json raw = nlohmann::json::array();
    for (std::size_t j = 0; j < d.size(); ++j) {
        raw.push_back({{"d", approx(d[j])}, {"m", approx(m[j])}});
    }
    out.raw = {{"stages", raw}, {"m0", approx(total)}};
    if (!out.reason.empty()) {
        return out;
    }
    if (total >= 9.0e18 || m[0] >= 9.0e18) {
        out.reason = "parameters too large to represent at this n";
        return out;
    }
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (!std::isfinite(d[j]) || !std::isfinite(m[j]) || d[j] <= 0) {
            out.reason = "parameters infeasible at this n: non-finite or non-positive values";
            return out;
        }
        out.config.stages.push_back({static_cast<long>(std::ceil(d[j])), static_cast<long>(std::ceil(m[j]))});
    }
    try {
        validate(out.config, static_cast<std::size_t>(total));
    } catch (const ValidationError& e) {
        out.reason = std::string("parameters infeasible at this n: ") + e.what();
        return out;
    }
    out.feasible = true;
    return out;
}

}  // namespace posetsat
