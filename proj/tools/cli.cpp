#include "posetsat_cli/cli.hpp"

#include "posetsat/chain.hpp"
#include "posetsat/chain_checks.hpp"
#include "posetsat/containers.hpp"
#include "posetsat/digraph.hpp"
#include "posetsat/errors.hpp"
#include "posetsat/experiments.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/matching.hpp"
#include "posetsat/report.hpp"
#include "posetsat/supersat.hpp"
#include "posetsat/weights.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace posetsat::cli {

namespace {

using nlohmann::json;

struct Output {
    std::string text;
    int code = ok;
};

struct FamilyOptions {
    std::string family = "boolean";
    int n = 0;
    int q = 2;
    int r = 2;

    FamilySpec spec() const {
        FamilySpec s;
        switch (parse_family(family)) {
            case Family::boolean: s = FamilySpec::boolean_lattice(n); break;
            case Family::subspace: s = FamilySpec::subspaces(n, q); break;
            case Family::rpower: s = FamilySpec::grid(n, r); break;
        }
        validate(s);
        return s;
    }
};

struct CommonOptions {
    std::string format = "json";
    std::string out;
    unsigned workers = 1;
    std::size_t limit_elements = Limits{}.max_elements;
    std::uint64_t limit_subsets = Limits{}.max_subsets;
    bool timed = false;

    Limits limits() const {
        Limits l;
        l.max_elements = limit_elements;
        l.max_subsets = limit_subsets;
        return l;
    }
};

void add_family(CLI::App* app, FamilyOptions& f) {
    app->add_option("--family", f.family, "boolean, subspace or rpower")
        ->check(CLI::IsMember({"boolean", "subspace", "rpower"}));
    app->add_option("--n", f.n, "dimension")->required();
    app->add_option("--q", f.q, "field size for subspace posets");
    app->add_option("--r", f.r, "largest coordinate value for rpower posets");
}

void add_common(CLI::App* app, CommonOptions& c, bool csv) {
    auto* fmt = app->add_option("--format", c.format, "json or csv");
    fmt->check(CLI::IsMember(csv ? std::vector<std::string>{"json", "csv"} : std::vector<std::string>{"json"}));
    app->add_option("--out", c.out, "write the report to a file instead of stdout");
    app->add_option("--workers", c.workers, "worker threads");
    app->add_option("--limit-elements", c.limit_elements, "largest poset to materialize");
    app->add_option("--limit-subsets", c.limit_subsets, "largest number of subsets to enumerate");
    app->add_flag("--time", c.timed, "record approximate wall time in the manifest");
}

struct StageOptions {
    std::string stages_file;
    std::vector<long> degrees;
    bool assume = false;
};

void add_stages(CLI::App* app, StageOptions& s) {
    app->add_option("--stages", s.stages_file, "stage config JSON file");
    app->add_option("--d", s.degrees, "degree thresholds; the sizes are found and certified by exact search")
        ->delimiter(',');
    app->add_flag("--assume", s.assume, "use stage premises without certifying them");
}

std::optional<StageConfig> load_stages(const StageOptions& s, const RankedPoset& poset, const Limits& limits,
                                       json& certification) {
    if (!s.stages_file.empty() && !s.degrees.empty()) {
        throw ValidationError("give either --stages or --d, not both");
    }
    if (!s.stages_file.empty()) {
        std::ifstream in(s.stages_file);
        if (!in) {
            throw ValidationError("cannot read " + s.stages_file);
        }
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ValidationError(std::string("malformed stage file: ") + e.what());
        }
        StageConfig config = StageConfig::from_json(j);
        validate(config, poset.size());
        if (!s.assume) {
            CheckReport report = certify_stages(poset, config, limits);
            certification = report.to_json();
        } else {
            config.certified = false;
        }
        return config;
    }
    if (!s.degrees.empty()) {
        StageConfig config = find_certified_stages(poset, s.degrees, limits);
        certification = {{"method", "exact minimum at size m + 1"}, {"passed", true}};
        return config;
    }
    return std::nullopt;
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            line += ',';
        }
        line += cells[i];
    }
    return line + '\n';
}

Theorem theorem_for(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::boolean: return Theorem::boolean_lattice;
        case Family::subspace: return Theorem::vector_space;
        case Family::rpower:
            if (spec.r != 2) {
                throw ValidationError("the multiset bound is stated for {0,1,2}^n");
            }
            return Theorem::multiset;
    }
    return Theorem::boolean_lattice;
}

// ---------------------------------------------------------------------------

Output poset_info(const FamilyOptions& f, const CommonOptions& c, bool list_elements) {
    FamilySpec spec = f.spec();
    LevelProfile profile(spec);
    if (c.format == "csv") {
        return {profile.csv()};
    }
    json j;
    j["spec"] = to_json(spec);
    j["label"] = describe(spec);
    std::vector<std::string> levels;
    Integer widest = 0;
    for (const Integer& size : profile.sizes()) {
        levels.push_back(to_string(size));
        widest = std::max(widest, size);
    }
    j["levels"] = levels;
    j["total"] = to_string(profile.total());
    j["max_level"] = to_string(widest);
    if (list_elements) {
        RankedPoset poset = RankedPoset::build(spec, c.limits());
        std::vector<std::string> codes;
        for (std::size_t x = 0; x < poset.size(); ++x) {
            codes.push_back(poset.encode(x));
        }
        j["elements"] = codes;
    }
    return {dump_json(j)};
}

Output supersat_brute(const FamilyOptions& f, const CommonOptions& c, const std::vector<long>& ms) {
    FamilySpec spec = f.spec();
    Limits limits = c.limits();
    auto poset = std::make_shared<const RankedPoset>(RankedPoset::build(spec, limits));
    ComparabilityDigraph digraph = build_digraph(*poset, OrientationRule::toward_middle_with_complement_arcs);
    auto dist = default_distribution(poset);
    RandomCountBound ingredients = random_count_parameters(*poset, digraph, *dist);

    std::vector<long> sizes = ms;
    if (sizes.empty()) {
        for (long m = 0; m <= static_cast<long>(poset->size()); ++m) {
            sizes.push_back(m);
        }
    }
    std::vector<MinCompResult> profile;
    if (ms.empty() && poset->size() <= 40 && (std::uint64_t{1} << poset->size()) <= limits.max_subsets) {
        profile = min_comp_profile(*poset, limits);
    }
    json rows = json::array();
    std::vector<std::string> violations;
    std::string csv = "m,brute_min,random_chain_bound,centered\n";
    for (long m : sizes) {
        if (m < 0 || m > static_cast<long>(poset->size())) {
            throw ValidationError("m must lie in [0, " + std::to_string(poset->size()) + "]");
        }
        MinCompResult best = profile.empty() ? brute_min_comp(*poset, m, limits) : profile[m];
        Rational bound = ingredients.bound(m);
        Integer centered = centered_construction(*poset, m).comp;
        if (bound > Rational(best.min)) {
            violations.push_back("m = " + std::to_string(m) + ": random-chain bound " + fraction_string(bound) +
                                 " exceeds the minimum " + to_string(best.min));
        }
        rows.push_back({{"m", m},
                        {"brute_min", to_string(best.min)},
                        {"witness", best.witness.to_json(*poset)},
                        {"exhaustive", best.exhaustive},
                        {"random_chain_bound", fraction_string(bound)},
                        {"centered", to_string(centered)}});
        csv += csv_line({std::to_string(m), to_string(best.min), fraction_string(bound), to_string(centered)});
    }
    int code = violations.empty() ? ok : violation;
    if (c.format == "csv") {
        return {csv, code};
    }
    json j;
    j["poset"] = to_json(spec);
    j["distribution"] = dist->kind();
    j["random_count"] = {{"max_conditional", fraction_string(ingredients.max_conditional)},
                         {"min_probability", fraction_string(ingredients.min_probability)},
                         {"arcs", ingredients.arc_count}};
    j["rows"] = rows;
    j["violations"] = violations;
    return {dump_json(j), code};
}

Output supersat_bound(const FamilyOptions& f, const CommonOptions& c, std::string theorem_name, int k,
                      std::optional<long> m, bool brute) {
    Theorem theorem;
    FamilySpec spec;
    if (theorem_name.empty()) {
        spec = f.spec();
        theorem = theorem_for(spec);
    } else {
        theorem = parse_theorem(theorem_name);
        spec = theorem == Theorem::boolean_lattice ? FamilySpec::boolean_lattice(f.n)
               : theorem == Theorem::vector_space  ? FamilySpec::subspaces(f.n, f.q)
                                                   : FamilySpec::multiset(f.n);
    }
    BoundResult result = theorem_bound(theorem, f.n, k, theorem == Theorem::vector_space ? f.q : 0);
    json j;
    j["bound"] = result.to_json();
    std::string csv = "m,threshold,rate,bound,brute_min\n";
    if (m) {
        j["m"] = *m;
        j["value"] = fraction_string(result.bound(*m));
        if (!brute) {
            csv += csv_line({std::to_string(*m), to_string(result.threshold), fraction_string(result.rate),
                             fraction_string(result.bound(*m)), ""});
        }
    }
    if (brute) {
        Limits limits = c.limits();
        RankedPoset poset = RankedPoset::build(spec, limits);
        std::vector<MinCompResult> profile;
        if (poset.size() <= 40 && (std::uint64_t{1} << poset.size()) <= limits.max_subsets) {
            profile = min_comp_profile(poset, limits);
        }
        json rows = json::array();
        json above = json::array();
        for (long s = 0; s <= static_cast<long>(poset.size()); ++s) {
            if (m && s != *m) {
                continue;
            }
            Integer best = profile.empty() ? brute_min_comp(poset, s, limits).min : profile[s].min;
            Rational value = result.bound(s);
            rows.push_back({{"m", s}, {"bound", fraction_string(value)}, {"brute_min", to_string(best)}});
            csv += csv_line({std::to_string(s), to_string(result.threshold), fraction_string(result.rate),
                             fraction_string(value), to_string(best)});
            if (value > Rational(best)) {
                above.push_back(s);
            }
        }
        j["rows"] = rows;
        j["bound_above_minimum"] = above;
        if (!above.empty()) {
            j["note"] = "the bound exceeds the exact minimum for some m; n is below the unknown n_0(k)";
        }
    }
    if (c.format == "csv") {
        return {csv};
    }
    return {dump_json(j)};
}

Output chain_verify(int n, std::optional<int> k, bool elements, const CommonOptions& c) {
    if (n < 1) {
        throw ValidationError("n must be at least 1");
    }
    if (c.format == "csv") {
        return {WeightTable(n).csv()};
    }
    std::vector<CheckReport> reports = {verify_weight_identities(n), verify_level_uniformity(n),
                                        verify_weight_inequalities(n)};
    if (elements) {
        reports.push_back(verify_element_uniformity(n, c.limits()));
    }
    if (k) {
        reports.push_back(verify_conditional_bound(n, *k));
    }
    json list = json::array();
    bool passed = true;
    for (const CheckReport& r : reports) {
        list.push_back(r.to_json());
        passed = passed && r.passed();
    }
    json j;
    j["n"] = n;
    j["reports"] = list;
    j["passed"] = passed;
    return {dump_json(j), passed ? ok : violation};
}

Output containers_build(const FamilyOptions& f, const CommonOptions& c, const StageOptions& s,
                        const std::string& dump_path) {
    FamilySpec spec = f.spec();
    Limits limits = c.limits();
    RankedPoset poset = RankedPoset::build(spec, limits);
    json certification;
    std::optional<StageConfig> config = load_stages(s, poset, limits, certification);
    if (!config) {
        throw ValidationError("containers-build needs --stages or --d");
    }
    json j;
    j["poset"] = to_json(spec);
    j["stages"] = config->to_json();
    if (!certification.is_null()) {
        j["certification"] = certification;
    }
    if (!s.stages_file.empty() && !s.assume && !config->certified) {
        return {dump_json(j), violation};
    }
    ContainerFamily family = build_family(poset, *config, limits);
    j["family"] = family.report.to_json();
    if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) {
            throw ValidationError("cannot write " + dump_path);
        }
        out << family.dump(poset);
    }
    return {dump_json(j), family.report.passed() ? ok : violation};
}

Output count_antichains_cmd(const FamilyOptions& f, const CommonOptions& c, const StageOptions& s, bool exact,
                            bool params) {
    FamilySpec spec = f.spec();
    Limits limits = c.limits();
    LevelProfile profile(spec);
    Integer width = *std::max_element(profile.sizes().begin(), profile.sizes().end());
    json j;
    j["spec"] = to_json(spec);
    j["width"] = to_string(width);
    std::vector<std::string> violations;
    std::optional<Integer> count;
    std::optional<RankedPoset> poset;
    if (exact || !s.stages_file.empty() || !s.degrees.empty()) {
        poset = RankedPoset::build(spec, limits);
    }
    if (exact) {
        count = count_antichains(*poset, limits);
        j["exact"] = to_string(*count);
        if (*count < (Integer(1) << static_cast<mp_bitcnt_t>(width.get_ui()))) {
            violations.push_back("fewer than 2^width antichains");
        }
    }
    json certification;
    if (poset) {
        if (auto config = load_stages(s, *poset, limits, certification)) {
            CountBound bound = count_upper_bound(poset->size(), *config, s.assume);
            j["log2_upper"] = fraction_string(bound.log2_upper);
            j["params"] = bound.to_json();
            if (!certification.is_null()) {
                j["certification"] = certification;
                if (!config->certified && !s.assume) {
                    violations.push_back("stage premises fail");
                }
            }
            if (count && *count > bound.container_count * (Integer(1) << static_cast<mp_bitcnt_t>(
                                                                   bound.container_size.get_ui()))) {
                violations.push_back("exact count exceeds the container bound");
            }
        }
    }
    if (params) {
        j["counting_parameters"] = counting_stage_parameters(spec).to_json();
    }
    j["violations"] = violations;
    return {dump_json(j), violations.empty() ? ok : violation};
}

Output random_antichain(const FamilyOptions& f, const CommonOptions& c, const std::string& p_text,
                        const std::vector<std::string>& c_texts, const std::string& eps_text, long trials,
                        std::uint64_t seed) {
    RandomSubsetSpec spec;
    spec.family = f.spec();
    spec.epsilon = parse_rational(eps_text);
    spec.trials = trials;
    spec.master_seed = seed;
    spec.workers = c.workers;
    if (!p_text.empty() && !c_texts.empty()) {
        throw ValidationError("give either --p or --c, not both");
    }
    if (!p_text.empty()) {
        spec.p = parse_rational(p_text);
    }
    std::vector<Rational> cs;
    for (const std::string& t : c_texts) {
        cs.push_back(parse_rational(t));
    }
    if (cs.size() <= 1) {
        if (cs.size() == 1) {
            spec.c = cs.front();
        } else if (!spec.p) {
            throw ValidationError("random-antichain needs --p or --c");
        }
        ExperimentReport report = run_threshold_experiment(spec);
        if (c.format == "csv") {
            return {report.csv()};
        }
        json j = report.to_json();
        return {dump_json(j)};
    }
    if (c.format == "csv") {
        throw ValidationError("CSV output takes a single c value");
    }
    json sweep = json::array();
    for (const ExperimentReport& report : run_threshold_sweep(spec, cs)) {
        sweep.push_back(report.to_json());
    }
    return {dump_json({{"sweep", sweep}})};
}

Output conjecture_explore(int n, int r, const std::vector<long>& ms, const CommonOptions& c) {
    Limits limits = c.limits();
    ConjectureReport report = explore_conjecture(n, r, ms, limits);
    int code = (r == 1 && !report.all_equal()) ? violation : ok;
    if (c.format == "csv") {
        std::string csv = "m,brute_min,centered,equal\n";
        for (const ConjectureRow& row : report.rows) {
            csv += csv_line({std::to_string(row.m), to_string(row.brute_min), to_string(row.centered),
                             row.equal ? "true" : "false"});
        }
        return {csv, code};
    }
    RankedPoset poset = RankedPoset::build(FamilySpec::grid(n, r), limits);
    json j = report.to_json(poset);
    return {dump_json(j), code};
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact supersaturation, chain-distribution and container computations on posets", "posetsat"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    FamilyOptions family;
    CommonOptions common;
    StageOptions stages;

    auto* info = app.add_subcommand("poset-info", "level sizes of a poset");
    add_family(info, family);
    add_common(info, common, true);
    bool list_elements = false;
    info->add_flag("--elements", list_elements, "list every element in canonical order");

    auto* brute = app.add_subcommand("supersat-brute", "exact minimum comparable pairs against the random-chain bound");
    add_family(brute, family);
    add_common(brute, common, true);
    std::vector<long> ms;
    brute->add_option("--m", ms, "subset sizes (default: all)")->delimiter(',');

    auto* bound = app.add_subcommand("supersat-bound", "closed-form supersaturation bound");
    add_family(bound, family);
    add_common(bound, common, true);
    std::string theorem;
    int k = 1;
    std::optional<long> bound_m;
    bool bound_brute = false;
    bound->add_option("--theorem", theorem, "boolean, subspace or multiset (default: from --family)");
    bound->add_option("--k", k, "number of extra levels");
    bound->add_option("--m", bound_m, "evaluate the bound at this size");
    bound->add_flag("--brute", bound_brute, "compare with exact minima");

    auto* chain = app.add_subcommand("chain-verify", "exact checks of the chain distribution on {0,1,2}^n");
    add_common(chain, common, true);
    int chain_n = 0;
    std::optional<int> chain_k;
    bool chain_elements = false;
    chain->add_option("--n", chain_n, "dimension")->required();
    chain->add_option("--k", chain_k, "also check the conditional-probability bound for this k");
    chain->add_flag("--elements", chain_elements, "also run the per-element recursion");

    auto* build = app.add_subcommand("containers-build", "container family over all antichains");
    add_family(build, family);
    add_common(build, common, false);
    add_stages(build, stages);
    std::string dump_path;
    build->add_option("--dump", dump_path, "write the containers, one per line");

    auto* count = app.add_subcommand("count-antichains", "exact antichain counts and container upper bounds");
    add_family(count, family);
    add_common(count, common, false);
    add_stages(count, stages);
    bool exact = false;
    bool params = false;
    count->add_flag("--exact", exact, "enumerate antichains exactly");
    count->add_flag("--params", params, "report the asymptotic parameter choices at this n");

    auto* random = app.add_subcommand("random-antichain", "largest antichains in random subsets");
    add_family(random, family);
    add_common(random, common, true);
    std::string p_text;
    std::vector<std::string> c_texts;
    std::string eps_text = "1/2";
    long trials = 100;
    std::uint64_t seed = 0;
    random->add_option("--p", p_text, "density as p/q or decimal");
    random->add_option("--c", c_texts, "constants c with p = min(1, c / scale); several run a sweep")->delimiter(',');
    random->add_option("--epsilon", eps_text, "slack in the (1 + epsilon) p width threshold");
    random->add_option("--trials", trials, "number of trials");
    random->add_option("--seed", seed, "master seed");

    auto* conj = app.add_subcommand("conjecture-explore", "centered sets against exact minima on {0..r}^n");
    add_common(conj, common, true);
    int conj_n = 0;
    int conj_r = 2;
    std::vector<long> conj_m;
    conj->add_option("--n", conj_n, "dimension")->required();
    conj->add_option("--r", conj_r, "largest coordinate value");
    conj->add_option("--m", conj_m, "subset sizes (default: all)")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : invalid;
    }

    auto start = std::chrono::steady_clock::now();
    RunManifest manifest;
    manifest.command.push_back("posetsat");
    manifest.command.insert(manifest.command.end(), args.begin(), args.end());
    manifest.limits = common.limits();
    manifest.workers = common.workers;
    if (random->parsed()) {
        manifest.master_seed = seed;
    }
    auto manifest_json = [&]() {
        if (common.timed) {
            manifest.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        return manifest.to_json();
    };

    Output result;
    try {
        if (common.workers < 1) {
            throw ValidationError("--workers must be at least 1");
        }
        if (info->parsed()) {
            result = poset_info(family, common, list_elements);
        } else if (brute->parsed()) {
            result = supersat_brute(family, common, ms);
        } else if (bound->parsed()) {
            result = supersat_bound(family, common, theorem, k, bound_m, bound_brute);
        } else if (chain->parsed()) {
            result = chain_verify(chain_n, chain_k, chain_elements, common);
        } else if (build->parsed()) {
            result = containers_build(family, common, stages, dump_path);
        } else if (count->parsed()) {
            result = count_antichains_cmd(family, common, stages, exact, params);
        } else if (random->parsed()) {
            result = random_antichain(family, common, p_text, c_texts, eps_text, trials, seed);
        } else if (conj->parsed()) {
            result = conjecture_explore(conj_n, conj_r, conj_m, common);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return invalid;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return resource_limit;
    } catch (const std::bad_alloc&) {
        err << "resource limit: out of memory\n";
        return resource_limit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return invalid;
    }

    // the manifest is added last so that --time covers the whole run
    if (common.format == "json") {
        json j = json::parse(result.text);
        if (j.is_object()) {
            j["manifest"] = manifest_json();
        }
        result.text = dump_json(j);
    }
    if (!common.out.empty()) {
        std::ofstream file(common.out);
        if (!file) {
            err << "error: cannot write " << common.out << '\n';
            return invalid;
        }
        file << result.text;
    } else {
        out << result.text;
    }
    return result.code;
}

}  // namespace posetsat::cli
