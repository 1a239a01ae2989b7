#include "posetsat/matching.hpp"

#include "posetsat/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <queue>

namespace posetsat {

std::size_t maximum_bipartite_matching(std::size_t right_size, const std::vector<std::vector<std::size_t>>& adjacency,
                                       std::vector<long>& match_left) {
    const std::size_t left_size = adjacency.size();
    const long inf = std::numeric_limits<long>::max();
    match_left.assign(left_size, -1);
    std::vector<long> match_right(right_size, -1);
    std::vector<long> dist(left_size);
    std::size_t matching = 0;

    auto bfs = [&]() {
        std::queue<std::size_t> queue;
        bool found = false;
        for (std::size_t u = 0; u < left_size; ++u) {
            if (match_left[u] < 0) {
                dist[u] = 0;
                queue.push(u);
            } else {
                dist[u] = inf;
            }
        }
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop();
            for (std::size_t v : adjacency[u]) {
                long w = match_right[v];
                if (w < 0) {
                    found = true;
                } else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    queue.push(static_cast<std::size_t>(w));
                }
            }
        }
        return found;
    };

    // Iterative DFS along the BFS layering.
    std::vector<std::size_t> next_edge(left_size);
    auto dfs = [&](std::size_t root) {
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t u = stack.back();
            if (next_edge[u] == adjacency[u].size()) {
                dist[u] = inf;
                stack.pop_back();
                continue;
            }
            std::size_t v = adjacency[u][next_edge[u]];
            long w = match_right[v];
            if (w < 0) {
                // Flip the alternating path held on the stack.
                for (std::size_t k = stack.size(); k-- > 0;) {
                    std::size_t x = stack[k];
                    std::size_t y = adjacency[x][next_edge[x]];
                    match_left[x] = static_cast<long>(y);
                    match_right[y] = static_cast<long>(x);
                }
                return true;
            }
            if (dist[w] == dist[u] + 1) {
                stack.push_back(static_cast<std::size_t>(w));
            } else {
                ++next_edge[u];
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(next_edge.begin(), next_edge.end(), 0);
        for (std::size_t u = 0; u < left_size; ++u) {
            if (match_left[u] < 0 && dfs(u)) {
                ++matching;
            }
        }
    }
    return matching;
}

AntichainWitness max_antichain(const FiniteOrder& order) {
    const std::size_t n = order.size();
    std::vector<std::vector<std::size_t>> adjacency(n);
    for (std::size_t x = 0; x < n; ++x) {
        const Bitset& up = order.above(x);
        for (std::size_t y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
            adjacency[x].push_back(y);
        }
    }
    std::vector<long> match_left;
    std::size_t matching = maximum_bipartite_matching(n, adjacency, match_left);
    std::vector<long> match_right(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
        if (match_left[x] >= 0) {
            match_right[match_left[x]] = static_cast<long>(x);
        }
    }
    // Konig: Z = vertices reachable from unmatched left vertices by alternating paths.
    std::vector<char> left_z(n, 0), right_z(n, 0);
    std::queue<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
        if (match_left[x] < 0) {
            left_z[x] = 1;
            queue.push(x);
        }
    }
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop();
        for (std::size_t v : adjacency[u]) {
            if (right_z[v]) {
                continue;
            }
            right_z[v] = 1;
            long w = match_right[v];
            if (w >= 0 && !left_z[w]) {
                left_z[w] = 1;
                queue.push(static_cast<std::size_t>(w));
            }
        }
    }
    AntichainWitness out;
    out.size = n - matching;
    for (std::size_t x = 0; x < n; ++x) {
        if (left_z[x] && !right_z[x]) {
            out.members.push_back(x);
        }
    }
    if (out.members.size() != out.size) {
        throw std::logic_error("antichain witness does not match the matching size");
    }
    return out;
}

AntichainWitness width(const RankedPoset& poset, const Limits& limits) {
    return max_antichain(poset.order(limits));
}

AntichainWitness max_antichain_in(const RankedPoset& poset, const std::vector<std::size_t>& subset,
                                  const Limits& limits) {
    if (subset.size() > limits.max_closure) {
        throw ResourceLimitError("subset has " + std::to_string(subset.size()) + " elements, above the closure limit");
    }
    std::vector<std::size_t> members = subset;
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw ValidationError("subset lists an element twice");
    }
    FiniteOrder induced(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            Relation rel = poset.compare(members[a], members[b]);
            if (rel == Relation::less) {
                induced.set_less(a, b);
            } else if (rel == Relation::greater) {
                induced.set_less(b, a);
            }
        }
    }
    AntichainWitness local = max_antichain(induced);
    for (std::size_t& x : local.members) {
        x = members[x];
    }
    return local;
}

std::size_t max_antichain_exhaustive(const FiniteOrder& order) {
    std::vector<std::uint64_t> adj = order.comparability_masks();
    std::function<std::size_t(std::uint64_t, std::size_t)> best = [&](std::uint64_t cand, std::size_t bound) {
        if (cand == 0) {
            return std::size_t{0};
        }
        if (static_cast<std::size_t>(std::popcount(cand)) <= bound) {
            return std::size_t{0};
        }
        int v = std::countr_zero(cand);
        std::uint64_t bit = std::uint64_t{1} << v;
        std::size_t with = 1 + best(cand & ~adj[v] & ~bit, bound > 0 ? bound - 1 : 0);
        std::size_t without = best(cand & ~bit, std::max(bound, with));
        return std::max(with, without);
    };
    std::uint64_t all = order.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << order.size()) - 1);
    return best(all, 0);
}

}  // namespace posetsat
