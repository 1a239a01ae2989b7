#include "posetsat/chain_checks.hpp"

#include "posetsat/chain.hpp"
#include "posetsat/errors.hpp"
#include "posetsat/levels.hpp"
#include "posetsat/poset.hpp"
#include "posetsat/weights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <string>

namespace posetsat {

namespace {

std::string at(int i, int s) {
    return "(i=" + std::to_string(i) + ", s=" + std::to_string(s) + ")";
}

void check_reflections(const WeightTable& t, CheckReport& report) {
    const int n = t.n();
    for (int i = 0; i <= 2 * n - 1; ++i) {
        const int mirror = 2 * n - i - 1;
        for (int s = t.min_slice(i); s <= t.max_slice(i); ++s) {
            if (t.wprime(mirror, n - i + s) != t.w(i, s)) {
                report.violations.push_back("w'(2n-i-1, n-i+s) != w(i,s) at " + at(i, s));
            }
            if (t.w(mirror, n - i + s - 1) != t.wprime(i, s)) {
                report.violations.push_back("w(2n-i-1, n-i+s-1) != w'(i,s) at " + at(i, s));
            }
        }
    }
}

}  // namespace

CheckReport verify_weight_identities(int n) {
    CheckReport report;
    report.check = "weight_identities";
    report.n = n;
    WeightTable t(n);
    const LevelProfile& L = t.profile();
    std::size_t entries = 0;
    for (int i = 0; i <= 2 * n - 1; ++i) {
        for (int s = t.min_slice(i); s <= t.max_slice(i); ++s) {
            ++entries;
            if (t.w(i, s) < 0 || t.wprime(i, s) < 0) {
                report.violations.push_back("negative weight at " + at(i, s));
            }
            Rational flow = Rational(i - 2 * s) * t.w(i, s) + Rational(n - i + s) * t.wprime(i, s);
            if (flow != make_rational(1, L.size(i))) {
                report.violations.push_back("flow " + fraction_string(flow) + " at " + at(i, s));
            }
        }
        if (i % 2 == 0 && t.w(i, i / 2) != 0) {
            report.violations.push_back("w(i, i/2) is not zero at i=" + std::to_string(i));
        }
        if (i >= n && t.wprime(i, i - n) != 0) {
            report.violations.push_back("w'(i, i-n) is not zero at i=" + std::to_string(i));
        }
        const int j = i + 1;
        for (int u = std::max(0, j - n); 2 * u <= j; ++u) {
            Rational incoming = Rational(u) * t.w(i, u - 1) + Rational(j - 2 * u) * t.wprime(i, u);
            if (incoming != make_rational(1, L.size(j))) {
                report.violations.push_back("incoming weight " + fraction_string(incoming) + " at level " +
                                            std::to_string(j) + ", t=" + std::to_string(u));
            }
        }
    }
    check_reflections(t, report);
    report.details["entries"] = entries;
    return report;
}

CheckReport verify_level_uniformity(int n) {
    CheckReport report;
    report.check = "level_uniformity";
    report.n = n;
    MuDistribution mu(n);
    const LevelProfile& L = mu.weights().profile();
    for (int i = 0; i <= 2 * n; ++i) {
        for (int s = std::max(0, i - n); 2 * s <= i; ++s) {
            if (mu.slice_probability(i, s) != make_rational(1, L.size(i))) {
                report.violations.push_back("P = " + fraction_string(mu.slice_probability(i, s)) + " at " + at(i, s));
            }
        }
    }
    return report;
}

CheckReport verify_element_uniformity(int n, const Limits& limits) {
    CheckReport report;
    report.check = "element_uniformity";
    report.n = n;
    auto poset = std::make_shared<const RankedPoset>(RankedPoset::build(FamilySpec::multiset(n), limits));
    auto explicit_dist = explicit_mu(poset);
    MuDistribution mu(n);
    for (std::size_t x = 0; x < poset->size(); ++x) {
        const int i = poset->rank(x);
        const Rational expected = make_rational(1, poset->level_count(i));
        const Rational& forward = explicit_dist->probability_at(x);
        if (forward != expected) {
            report.violations.push_back("P = " + fraction_string(forward) + " at " + poset->encode(x));
        }
        if (mu.element_probability(poset->element(x)) != forward) {
            report.violations.push_back("slice and element recursions disagree at " + poset->encode(x));
        }
    }
    report.details["elements"] = poset->size();
    return report;
}

CheckReport verify_weight_inequalities(int n) {
    CheckReport report;
    report.check = "weight_inequalities";
    report.n = n;
    WeightTable t(n);
    const LevelProfile& L = t.profile();
    Rational max_ratio = 0;
    if (n >= 2) {
        for (int i = 1; i <= n - 1; ++i) {
            for (int s = 0; 2 * s < i; ++s) {
                if (!(t.wprime(i, s) < t.w(i, s))) {
                    report.violations.push_back("(a) w' >= w at " + at(i, s));
                }
            }
        }
    } else {
        report.notes.push_back("(a) skipped: needs n >= 2");
    }
    if (n >= 5) {
        for (int i = 1; i <= n - 1; ++i) {
            Rational bound = make_rational(2, Integer(i + 1) * L.size(i + 1));
            for (int s = 0; 2 * s < i; ++s) {
                Rational ratio = t.w(i, s) / bound;
                max_ratio = std::max(max_ratio, ratio);
                if (t.w(i, s) > bound) {
                    report.violations.push_back("(b) w above 2/((i+1)|L_{i+1}|) at " + at(i, s));
                }
            }
        }
        for (int i = 0; i <= 2 * n - 1; ++i) {
            Rational bound = i <= n - 1 ? make_rational(Integer(2) * L.size(i), Integer(i + 1) * L.size(i + 1))
                                        : make_rational(2, 2 * n - i);
            for (int s = t.min_slice(i); s <= t.max_slice(i); ++s) {
                for (const Rational& p : {t.to_more_twos(i, s), t.to_same_twos(i, s)}) {
                    max_ratio = std::max(max_ratio, Rational(p / bound));
                    if (p > bound) {
                        report.violations.push_back("(c) transition " + fraction_string(p) + " above " +
                                                    fraction_string(bound) + " at " + at(i, s));
                    }
                }
            }
        }
        report.max_ratio = max_ratio;
    } else {
        report.notes.push_back("(b), (c) skipped: need n >= 5");
    }
    CheckReport sym;
    sym.check = "(d)";
    check_reflections(t, sym);
    for (const std::string& v : sym.violations) {
        report.violations.push_back("(d) " + v);
    }
    return report;
}

std::optional<Rational> conditional_threshold(int n, int k) {
    if (k < 1 || 3 * k - 1 > 2 * n) {
        return std::nullopt;
    }
    Rational excess = make_rational(multiset_level(n, 3 * k - 1), multiset_level(n, 2 * k - 1)) - 1;
    if (excess <= 0) {
        return std::nullopt;
    }
    return 1 / excess;
}

CheckReport verify_conditional_bound(int n, int k) {
    if (k < 1) {
        throw ValidationError("k must be at least 1");
    }
    if (n < 1) {
        throw ValidationError("n must be at least 1");
    }
    CheckReport report;
    report.check = "conditional_bound";
    report.n = n;
    report.details["k"] = k;
    auto threshold = conditional_threshold(n, k);
    if (!threshold) {
        report.notes.push_back("threshold undefined at this n (needs 3k-1 <= 2n and a ratio above 1)");
        return report;
    }
    report.details["threshold"] = fraction_string(*threshold);
    auto applies = [&](int i, int j) {
        return std::abs(i - j) >= k && (std::min(i, j) >= 2 * k || std::max(i, j) <= 2 * n - 2 * k) &&
               std::abs(j - n) <= std::abs(i - n);
    };
    MuDistribution mu(n);
    const LevelProfile& L = mu.weights().profile();
    Rational max_ratio = 0;
    std::size_t checked = 0;
    std::size_t violation_count = 0;
    const std::size_t listed = 50;
    auto record = [&](const Rational& p, int i, int j, const std::string& where) {
        ++checked;
        Rational ratio = p / *threshold;
        if (ratio > max_ratio) {
            max_ratio = ratio;
        }
        if (p > *threshold) {
            ++violation_count;
            if (report.violations.size() < listed) {
                report.violations.push_back("P = " + fraction_string(p) + " for i=" + std::to_string(i) +
                                            ", j=" + std::to_string(j) + " " + where);
            }
        }
    };
    // A comparable pair x < y is described up to symmetry by x's level and
    // slice and by how many coordinates rise 0->1, 0->2 and 1->2.
    for (int a = 0; a <= 2 * n; ++a) {
        for (int s = std::max(0, a - n); 2 * s <= a; ++s) {
            const int zeros = n - a + s;
            const int ones = a - 2 * s;
            for (int n01 = 0; n01 <= zeros; ++n01) {
                for (int n02 = 0; n01 + n02 <= zeros; ++n02) {
                    for (int n12 = 0; n12 <= ones; ++n12) {
                        const int b = a + n01 + 2 * n02 + n12;
                        if (b == a) {
                            continue;
                        }
                        bool up = applies(a, b);
                        bool down = applies(b, a);
                        if (!up && !down) {
                            continue;
                        }
                        Rational p = mu.upward_conditional(a, s, n01, n02, n12);
                        std::string where = "(slice " + std::to_string(s) + ", rises " + std::to_string(n01) + "/" +
                                            std::to_string(n02) + "/" + std::to_string(n12) + ")";
                        if (up) {
                            record(p, a, b, where);
                        }
                        if (down) {
                            record(p * Rational(L.size(b)) / Rational(L.size(a)), b, a, where);
                        }
                    }
                }
            }
        }
    }
    report.max_ratio = max_ratio;
    report.details["pairs_checked"] = checked;
    report.details["violation_count"] = violation_count;
    report.details["decay_factor_max_approx"] = approx(max_conditional_decay_factor());
    return report;
}

double conditional_decay_factor(double c) {
    return std::pow(2 * c, c) * (1 - c / 2) / (std::exp(c / 2) * std::pow(1 - c / 2, c / 2));
}

double max_conditional_decay_factor(int grid) {
    double best = 0;
    for (int t = 1; t <= grid; ++t) {
        best = std::max(best, conditional_decay_factor(0.1 + t / static_cast<double>(grid)));
    }
    return best;
}

}  // namespace posetsat
