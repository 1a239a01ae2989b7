#include "posetsat/experiments.hpp"

#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/matching.hpp"
#include "posetsat/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace posetsat {

namespace {

constexpr std::size_t kMaxMeasuredElements = 6561;

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
    return mix64(master + (trial + 1) * 0x9e3779b97f4a7c15ULL);
}

std::vector<std::size_t> sample_random_subset(std::size_t size, const Rational& p, std::uint64_t seed) {
    if (p < 0 || p > 1) {
        throw ValidationError("p must lie in [0, 1]");
    }
    std::vector<std::size_t> out;
    if (p == 0) {
        return out;
    }
    std::mt19937_64 gen(seed);
    // threshold = ceil(p * 2^64); p close enough to 1 keeps everything
    Integer scaled = ceil(p * Rational(Integer(1) << 64));
    if (scaled >= (Integer(1) << 64)) {
        out.resize(size);
        for (std::size_t x = 0; x < size; ++x) {
            out[x] = x;
        }
        return out;
    }
    std::uint64_t threshold = 0;
    mpz_export(&threshold, nullptr, -1, sizeof threshold, 0, 0, scaled.get_mpz_t());
    for (std::size_t x = 0; x < size; ++x) {
        if (gen() < threshold) {
            out.push_back(x);
        }
    }
    return out;
}

Rational density_scale(const FamilySpec& spec) {
    if (spec.family != Family::subspace) {
        return spec.n;
    }
    Rational scale = Rational(power(spec.q, static_cast<unsigned long>(spec.n / 2)));
    if (spec.n % 2 == 1) {
        // floor(sqrt(q) * 2^40) / 2^40
        Integer shifted = Integer(spec.q) << 80;
        Integer root;
        mpz_sqrt(root.get_mpz_t(), shifted.get_mpz_t());
        scale *= Rational(root, Integer(1) << 40);
        scale.canonicalize();
    }
    return scale;
}

Rational RandomSubsetSpec::density() const {
    if (p) {
        return *p;
    }
    Rational value = c / density_scale(family);
    return value > 1 ? Rational(1) : value;
}

nlohmann::json RandomSubsetSpec::to_json() const {
    nlohmann::json j;
    j["family"] = posetsat::to_json(family);
    if (p) {
        j["p"] = fraction_string(*p);
    } else {
        j["c"] = fraction_string(c);
    }
    j["epsilon"] = fraction_string(epsilon);
    j["trials"] = trials;
    j["master_seed"] = std::to_string(master_seed);
    j["seed_derivation"] = "splitmix64(master_seed + (trial + 1) * 0x9e3779b97f4a7c15)";
    return j;
}

void validate(const RandomSubsetSpec& spec) {
    validate(spec.family);
    if (spec.p && (*spec.p < 0 || *spec.p > 1)) {
        throw ValidationError("p must lie in [0, 1]");
    }
    if (!spec.p && spec.c < 0) {
        throw ValidationError("c must be non-negative");
    }
    if (spec.epsilon <= 0) {
        throw ValidationError("epsilon must be positive");
    }
    if (spec.trials < 1) {
        throw ValidationError("trials must be positive");
    }
    if (spec.workers < 1) {
        throw ValidationError("workers must be positive");
    }
    if (LevelProfile(spec.family).total() > Integer(static_cast<unsigned long>(kMaxMeasuredElements))) {
        throw ResourceLimitError(describe(spec.family) + " is too large for repeated antichain measurement (limit " +
                                 std::to_string(kMaxMeasuredElements) + " elements)");
    }
}

double ExperimentReport::exceedance() const {
    return trials.empty() ? 0.0 : static_cast<double>(exceed_count) / static_cast<double>(trials.size());
}

double ExperimentReport::construction_exceedance() const {
    return trials.empty() ? 0.0
                          : static_cast<double>(construction_exceed_count) / static_cast<double>(trials.size());
}

double ExperimentReport::mean_size() const {
    double total = 0;
    for (const TrialOutcome& t : trials) {
        total += static_cast<double>(t.size);
    }
    return trials.empty() ? 0.0 : total / static_cast<double>(trials.size());
}

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json j;
    j["spec"] = spec.to_json();
    j["generator"] = kGeneratorId;
    j["p"] = fraction_string(p);
    j["poset_size"] = poset_size;
    j["poset_width"] = to_string(poset_width);
    nlohmann::json rows = nlohmann::json::array();
    for (const TrialOutcome& t : trials) {
        rows.push_back({{"size", t.size}, {"width", t.width}, {"construction", t.construction}});
    }
    j["per_trial"] = rows;
    j["exceed_count"] = exceed_count;
    j["exceedance"] = approx(exceedance());
    j["construction_exceed_count"] = construction_exceed_count;
    j["construction_exceedance"] = approx(construction_exceedance());
    j["mean_size_approx"] = approx(mean_size());
    j["chernoff_ref"] = approx(chernoff_ref);
    return j;
}

std::string ExperimentReport::csv() const {
    std::ostringstream out;
    out << "trial,size,max_antichain\n";
    for (std::size_t i = 0; i < trials.size(); ++i) {
        out << i << ',' << trials[i].size << ',' << trials[i].width << '\n';
    }
    return out.str();
}

namespace {

// The level holding a maximum antichain and the one just above it.
std::pair<int, int> construction_levels(const RankedPoset& poset) {
    const FamilySpec& spec = poset.spec();
    int middle = spec.family == Family::subspace ? spec.n / 2 : poset.top_rank() / 2;
    return {middle, std::min(middle + 1, poset.top_rank())};
}

TrialOutcome run_trial(const RankedPoset& poset, const FiniteOrder& order, const Rational& p, std::uint64_t seed) {
    TrialOutcome out;
    std::vector<std::size_t> subset = sample_random_subset(poset.size(), p, seed);
    out.size = subset.size();
    out.width = subset.empty() ? 0 : max_antichain(order.induced(subset)).size;
    auto [low, high] = construction_levels(poset);
    if (low == high) {
        out.construction = static_cast<std::size_t>(std::count_if(
            subset.begin(), subset.end(), [&](std::size_t x) { return poset.rank(x) == low; }));
        return out;
    }
    std::vector<char> blocked(poset.size(), 0);
    for (std::size_t x : subset) {
        if (poset.rank(x) == low) {
            ++out.construction;
            for (std::size_t y : poset.upper_covers(x)) {
                blocked[y] = 1;
            }
        }
    }
    for (std::size_t x : subset) {
        if (poset.rank(x) == high && !blocked[x]) {
            ++out.construction;
        }
    }
    return out;
}

}  // namespace

ExperimentReport run_threshold_experiment(const RandomSubsetSpec& spec) {
    validate(spec);
    Limits limits;
    limits.max_closure = kMaxMeasuredElements;
    RankedPoset poset = RankedPoset::build(spec.family, limits);
    FiniteOrder order = poset.order(limits);
    ExperimentReport report;
    report.spec = spec;
    report.p = spec.density();
    report.poset_size = poset.size();
    LevelProfile profile(spec.family);
    report.poset_width = *std::max_element(profile.sizes().begin(), profile.sizes().end());
    report.trials.assign(static_cast<std::size_t>(spec.trials), {});

    std::atomic<long> next{0};
    auto worker = [&]() {
        for (long t = next++; t < spec.trials; t = next++) {
            report.trials[t] = run_trial(poset, order, report.p, derive_seed(spec.master_seed, t));
        }
    };
    unsigned count = std::min<unsigned>(spec.workers, static_cast<unsigned>(spec.trials));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < count; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    const Rational expected_width = report.p * Rational(report.poset_width);
    const Rational limit = (1 + spec.epsilon) * expected_width;
    for (const TrialOutcome& t : report.trials) {
        report.exceed_count += Rational(static_cast<unsigned long>(t.width)) > limit;
        report.construction_exceed_count += Rational(static_cast<unsigned long>(t.construction)) > expected_width;
    }
    report.chernoff_ref = expected_width > 0 ? chernoff_bound(spec.epsilon, expected_width) : 1.0;
    return report;
}

std::vector<ExperimentReport> run_threshold_sweep(RandomSubsetSpec spec, const std::vector<Rational>& cs) {
    std::vector<ExperimentReport> out;
    spec.p.reset();
    for (const Rational& c : cs) {
        spec.c = c;
        out.push_back(run_threshold_experiment(spec));
    }
    return out;
}

double chernoff_bound(const Rational& delta, const Rational& expectation) {
    if (delta <= 0) {
        throw ValidationError("delta must be positive");
    }
    if (expectation < 0) {
        throw ValidationError("the expectation must be non-negative");
    }
    const double d = to_double(delta);
    const double e = to_double(expectation);
    return delta < 1 ? std::exp(-d * d * e / 3) : std::exp(-d * e / 3);
}

}  // namespace posetsat
