#pragma once

// Brute-force reference implementations used by the tests. They are kept
// deliberately naive and share no code with the library beyond element
// storage.

#include "posetsat/exact.hpp"
#include "posetsat/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using posetsat::Integer;
using posetsat::Rational;
using posetsat::RankedPoset;

inline Integer pascal(long n, long k) {
    if (k < 0 || k > n || n < 0) {
        return 0;
    }
    std::vector<Integer> row{1};
    for (long r = 1; r <= n; ++r) {
        std::vector<Integer> next(r + 1);
        next[0] = next[r] = 1;
        for (long c = 1; c < r; ++c) {
            next[c] = row[c - 1] + row[c];
        }
        row = std::move(next);
    }
    return row[k];
}

// Every vector of the row space of an RREF payload, as base-q numbers.
// Only prime q (plain modular arithmetic).
inline std::set<long> span(const std::vector<std::uint8_t>& payload, int n, int q) {
    const int dim = n == 0 ? 0 : static_cast<int>(payload.size()) / n;
    std::set<long> out;
    long combos = 1;
    for (int i = 0; i < dim; ++i) {
        combos *= q;
    }
    for (long code = 0; code < combos; ++code) {
        std::vector<int> v(n, 0);
        long c = code;
        for (int r = 0; r < dim; ++r) {
            int coef = static_cast<int>(c % q);
            c /= q;
            for (int j = 0; j < n; ++j) {
                v[j] = (v[j] + coef * payload[r * n + j]) % q;
            }
        }
        long key = 0;
        for (int j = 0; j < n; ++j) {
            key = key * q + v[j];
        }
        out.insert(key);
    }
    return out;
}

// x <= y from first principles: coordinatewise for digit vectors, row-space
// inclusion for subspaces.
inline bool leq(const RankedPoset& poset, std::size_t a, std::size_t b) {
    const auto& x = poset.element(a);
    const auto& y = poset.element(b);
    const auto& spec = poset.spec();
    if (spec.family == posetsat::Family::subspace) {
        auto sx = span(x.payload, spec.n, spec.q);
        auto sy = span(y.payload, spec.n, spec.q);
        return std::includes(sy.begin(), sy.end(), sx.begin(), sx.end());
    }
    for (std::size_t j = 0; j < x.payload.size(); ++j) {
        if (x.payload[j] > y.payload[j]) {
            return false;
        }
    }
    return true;
}

// Symmetric comparability matrix (no diagonal) from the first-principles order.
inline std::vector<std::vector<bool>> comparability(const RankedPoset& poset) {
    const std::size_t n = poset.size();
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && leq(poset, a, b)) {
                c[a][b] = c[b][a] = true;
            }
        }
    }
    return c;
}

inline long comp(const std::vector<std::vector<bool>>& c, const std::vector<std::size_t>& members) {
    long count = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            count += c[members[i]][members[j]];
        }
    }
    return count;
}

inline std::vector<std::uint32_t> masks(const std::vector<std::vector<bool>>& c) {
    std::vector<std::uint32_t> out(c.size(), 0);
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = 0; b < c.size(); ++b) {
            if (c[a][b]) {
                out[a] |= std::uint32_t{1} << b;
            }
        }
    }
    return out;
}

// Minimum comp over all subsets of each size; at most 24 elements.
inline std::vector<long> min_comp_all(const std::vector<std::vector<bool>>& c) {
    const std::size_t n = c.size();
    auto adj = masks(c);
    std::vector<long> best(n + 1, -1);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        long twice = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (mask >> v & 1) {
                twice += std::popcount(adj[v] & mask);
            }
        }
        int size = std::popcount(mask);
        if (best[size] < 0 || twice / 2 < best[size]) {
            best[size] = twice / 2;
        }
    }
    return best;
}

// Number of antichains (subsets with no comparable pair); at most 24 elements.
inline std::uint64_t antichain_count(const std::vector<std::vector<bool>>& c) {
    const std::size_t n = c.size();
    auto adj = masks(c);
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if ((mask >> v & 1) && (adj[v] & mask)) {
                ok = false;
            }
        }
        count += ok;
    }
    return count;
}

// Largest independent set of the comparability graph; at most 24 elements.
inline std::size_t max_antichain(const std::vector<std::vector<bool>>& c) {
    const std::size_t n = c.size();
    auto adj = masks(c);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if ((mask >> v & 1) && (adj[v] & mask)) {
                ok = false;
            }
        }
        if (ok) {
            best = std::max<std::size_t>(best, std::popcount(mask));
        }
    }
    return best;
}

// All maximal chains bottom to top, following upper covers.
inline void maximal_chains(const RankedPoset& poset, std::vector<std::size_t>& chain,
                           std::vector<std::vector<std::size_t>>& out) {
    const std::size_t last = chain.back();
    if (poset.upper_covers(last).empty()) {
        out.push_back(chain);
        return;
    }
    for (std::size_t y : poset.upper_covers(last)) {
        chain.push_back(y);
        maximal_chains(poset, chain, out);
        chain.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> maximal_chains(const RankedPoset& poset) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t x = poset.level_begin(0); x < poset.level_end(0); ++x) {
        std::vector<std::size_t> chain{x};
        maximal_chains(poset, chain, out);
    }
    return out;
}

}  // namespace oracle
