#pragma once

// Brute-force reference implementations and seeded generators used only by
// the test suites. Everything here is independent of the library's own
// algorithms: distances come from BFS, densities from subset enumeration,
// chromatic numbers from plain backtracking.

#include "sqcolor/coloring.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

inline std::vector<int> bfs_distances(const sqcolor::Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

// Square by definition: edge iff BFS distance is 1 or 2.
inline sqcolor::Graph square_by_bfs(const sqcolor::Graph& g) {
    sqcolor::Graph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = v + 1; u < g.vertex_count(); ++u)
            if (dist[u] == 1 || dist[u] == 2) out.add_edge(v, u);
    }
    return out;
}

inline int girth(const sqcolor::Graph& g) {
    int best = -1;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    parent[u] = v;
                    queue.push_back(u);
                } else if (u != parent[v]) {
                    int len = dist[v] + dist[u] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

// Exact max |E(S)|/|S| over nonempty subsets, by enumeration. Usable up to
// ~20 vertices.
inline sqcolor::Rational densest_exhaustive(const sqcolor::Graph& g) {
    const int n = g.vertex_count();
    if (n > 24) throw std::invalid_argument("densest_exhaustive: graph too large");
    if (g.edge_count() == 0) return sqcolor::Rational(0);
    std::vector<std::uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v] |= 1u << u;
    std::vector<int> edges(1u << n, 0);
    long long best_e = 0, best_v = 1;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int v = __builtin_ctz(s);
        std::uint32_t rest = s & (s - 1);
        edges[s] = edges[rest] + __builtin_popcount(nbr[v] & rest);
        long long sz = __builtin_popcount(s);
        if ((long long)edges[s] * best_v > best_e * sz) {
            best_e = edges[s];
            best_v = sz;
        }
    }
    return sqcolor::Rational(best_e, best_v);
}

inline bool k_colorable(const sqcolor::Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> color(n, 0);
    // vertex i may only open color max_used+1, killing color symmetry
    std::function<bool(int, int)> go = [&](int v, int used) {
        if (v == n) return true;
        int limit = std::min(used + 1, k);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (go(v + 1, std::max(used, c))) return true;
            color[v] = 0;
        }
        return false;
    };
    return go(0, 0);
}

inline int chromatic_exhaustive(const sqcolor::Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (k_colorable(g, k)) return k;
}

inline int max_clique_exhaustive(const sqcolor::Graph& g) {
    const int n = g.vertex_count();
    if (n > 30) throw std::invalid_argument("max_clique_exhaustive: graph too large");
    std::vector<std::uint64_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) nbr[v] |= 1ull << u;
    int best = 0;
    std::function<void(int, std::uint64_t, int)> go = [&](int v, std::uint64_t allowed, int size) {
        best = std::max(best, size);
        for (int u = v; u < n; ++u)
            if ((allowed >> u) & 1) go(u + 1, allowed & nbr[u], size + 1);
    };
    go(0, ~0ull >> (64 - n), 0);
    return best;
}

inline sqcolor::Graph random_gnm(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    sqcolor::Graph g(n);
    long long max_edges = (long long)n * (n - 1) / 2;
    m = (int)std::min<long long>(m, max_edges);
    while (g.edge_count() < m) {
        int u = (int)(rng() % n);
        int v = (int)(rng() % n);
        if (u != v) g.add_edge(std::min(u, v), std::max(u, v));
    }
    return g;
}

// Uniform matching between two color lists: a shuffled pairing with roughly
// a quarter of the pairs dropped, so most matchings are proper partial ones.
inline std::vector<std::pair<int, int>> random_matching(const std::vector<int>& left,
                                                        const std::vector<int>& right,
                                                        std::mt19937_64& rng) {
    std::vector<int> perm(right);
    for (size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    std::vector<std::pair<int, int>> pairs;
    size_t limit = std::min(left.size(), perm.size());
    for (size_t i = 0; i < limit; ++i)
        if (rng() % 4 != 0) pairs.push_back({left[i], perm[i]});
    return pairs;
}

inline sqcolor::Correspondence identity_correspondence(const sqcolor::Graph& g,
                                                       const sqcolor::ListAssignment& lists) {
    sqcolor::Correspondence corr;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) {
            if (u <= v) continue;
            std::vector<std::pair<int, int>> pairs;
            for (int c : lists.lists[v])
                if (std::find(lists.lists[u].begin(), lists.lists[u].end(), c) !=
                    lists.lists[u].end())
                    pairs.push_back({c, c});
            corr.set_matching(v, u, pairs);
        }
    return corr;
}

// n distinct colors drawn from 1..universe.
inline std::vector<int> random_list(int size, int universe, std::mt19937_64& rng) {
    std::vector<int> all(universe);
    std::iota(all.begin(), all.end(), 1);
    for (int i = 0; i < size; ++i) std::swap(all[i], all[i + rng() % (universe - i)]);
    all.resize(size);
    return all;
}

} // namespace oracle
