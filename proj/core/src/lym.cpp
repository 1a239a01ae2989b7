#include "posetsat/lym.hpp"

#include "posetsat/errors.hpp"

#include <functional>

namespace posetsat {

CheckReport check_lym(const RankedPoset& poset, const std::vector<std::size_t>& antichain) {
    CheckReport report;
    report.check = "lym";
    report.n = poset.is_family() ? poset.spec().n : 0;
    for (std::size_t a = 0; a < antichain.size(); ++a) {
        for (std::size_t b = a + 1; b < antichain.size(); ++b) {
            if (antichain[a] == antichain[b]) {
                throw ValidationError("antichain lists an element twice");
            }
            if (poset.comparable(antichain[a], antichain[b])) {
                report.violations.push_back("not an antichain: " + poset.encode(antichain[a]) + " and " +
                                            poset.encode(antichain[b]) + " are comparable");
            }
        }
    }
    std::vector<long> per_level(poset.top_rank() + 1, 0);
    for (std::size_t x : antichain) {
        ++per_level.at(poset.rank(x));
    }
    Rational sum = 0;
    for (int i = 0; i <= poset.top_rank(); ++i) {
        if (per_level[i] > 0) {
            sum += make_rational(per_level[i], static_cast<long>(poset.level_count(i)));
        }
    }
    report.details["lym_sum"] = fraction_string(sum);
    if (sum > 1) {
        report.violations.push_back("LYM sum " + fraction_string(sum) + " exceeds 1");
    }
    return report;
}

CheckReport check_normalised_matching(const RankedPoset& poset, const Limits& limits) {
    CheckReport report;
    report.check = "normalised_matching";
    report.n = poset.is_family() ? poset.spec().n : 0;
    std::uint64_t subsets = 0;
    for (int i = 0; i < poset.top_rank(); ++i) {
        const std::size_t lo = poset.level_begin(i);
        const std::size_t size = poset.level_count(i);
        const std::size_t up_lo = poset.level_begin(i + 1);
        const std::size_t up_size = poset.level_count(i + 1);
        if (size > limits.max_matching_level) {
            throw ResourceLimitError("level " + std::to_string(i) + " has " + std::to_string(size) +
                                     " elements; exhaustive shadow checks are limited to " +
                                     std::to_string(limits.max_matching_level));
        }
        std::vector<Bitset> shadow(size, Bitset(up_size));
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b : poset.upper_covers(lo + a)) {
                shadow[a].set(b - up_lo);
            }
        }
        const Integer level = static_cast<unsigned long>(size);
        const Integer up_level = static_cast<unsigned long>(up_size);
        bool level_ok = true;
        // Depth-first over subsets, carrying the union of shadows.
        std::function<void(std::size_t, std::size_t, const Bitset&)> walk = [&](std::size_t next, std::size_t count,
                                                                               const Bitset& acc) {
            for (std::size_t a = next; a < size && level_ok; ++a) {
                Bitset grown = acc | shadow[a];
                ++subsets;
                if (Integer(static_cast<unsigned long>(grown.count())) * level <
                    Integer(static_cast<unsigned long>(count + 1)) * up_level) {
                    report.violations.push_back("level " + std::to_string(i) + ": a subset of size " +
                                                std::to_string(count + 1) + " has shadow " +
                                                std::to_string(grown.count()));
                    level_ok = false;
                    return;
                }
                walk(a + 1, count + 1, grown);
            }
        };
        walk(0, 0, Bitset(up_size));
    }
    report.details["subsets_checked"] = subsets;
    return report;
}

}  // namespace posetsat
