#include "sqcolor/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace sqcolor {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    std::uint64_t max_nodes;
    Clock::time_point end;
    bool timed;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    explicit Deadline(const Budget& b)
        : max_nodes(b.max_nodes),
          end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                 std::chrono::duration<double>(b.max_seconds))),
          timed(b.max_seconds > 0) {}

    // Counts one explored node; returns false once the budget is spent.
    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > max_nodes) exhausted = true;
        if (timed && (nodes & 1023) == 0 && Clock::now() > end) exhausted = true;
        return !exhausted;
    }
};

// Fixed-size bitset over vertex ids, for dense adjacency tests in the
// exact searches.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    Bits operator&(const Bits& o) const {
        Bits r(*this);
        for (size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
        return r;
    }
    int and_count(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }
    template <typename F>
    void for_each(F f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = __builtin_ctzll(x);
                f((int)(i * 64 + b));
                x &= x - 1;
            }
        }
    }
};

std::vector<Bits> adjacency_bits(const Graph& g) {
    std::vector<Bits> adj(g.vertex_count(), Bits(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) adj[v].set(u);
    return adj;
}

std::vector<int> sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace

Coloring greedy_color(const Graph& g, const Ordering& ord) {
    Ordering checked = ordering_from_sequence(g, ord.sequence);
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[checked.sequence[i]] = i;
    Coloring c;
    c.color.assign(n, 0);
    std::vector<char> used(n + 2, 0);
    for (int v : checked.sequence) {
        int top = 0;
        for (int u : g.neighbors(v)) {
            if (pos[u] < pos[v] && c.color[u] != 0) {
                used[c.color[u]] = 1;
                top = std::max(top, c.color[u]);
            }
        }
        int pick = 1;
        while (used[pick]) ++pick;
        c.color[v] = pick;
        c.palette = std::max(c.palette, pick);
        for (int u : g.neighbors(v))
            if (c.color[u] != 0 && c.color[u] <= top) used[c.color[u]] = 0;
    }
    return c;
}

bool check_proper(const Graph& g, const Coloring& c) {
    const int n = g.vertex_count();
    if ((int)c.color.size() != n) throw std::invalid_argument("coloring size mismatch");
    for (int v = 0; v < n; ++v)
        if (c.color[v] == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no color");
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (u > v && c.color[u] == c.color[v]) return false;
    return true;
}

namespace {

struct CliqueSearch {
    const std::vector<Bits>& adj;
    Deadline& deadline;
    std::vector<int> best;
    std::vector<int> current;

    void expand(Bits cand, Bits excl) {
        if (!deadline.tick()) return;
        if (!cand.any() && !excl.any()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        if ((int)current.size() + cand.count() <= (int)best.size()) return;

        // pivot: vertex of cand|excl covering most of cand
        int pivot = -1, cover = -1;
        auto consider = [&](int u) {
            int c = cand.and_count(adj[u]);
            if (c > cover) {
                cover = c;
                pivot = u;
            }
        };
        cand.for_each(consider);
        excl.for_each(consider);

        std::vector<int> branch;
        cand.for_each([&](int v) {
            if (pivot < 0 || !adj[pivot].test(v)) branch.push_back(v);
        });
        for (int v : branch) {
            current.push_back(v);
            expand(cand & adj[v], excl & adj[v]);
            current.pop_back();
            if (deadline.exhausted) return;
            cand.reset(v);
            excl.set(v);
            if ((int)current.size() + cand.count() <= (int)best.size()) return;
        }
    }
};

std::vector<int> greedy_clique_seed(const Graph& g) {
    auto order = degeneracy_ordering(g).ordering.sequence;
    std::reverse(order.begin(), order.end());  // densest end first
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return clique;
}

} // namespace

CliqueCertificate max_clique(const Graph& g, Budget budget) {
    CliqueCertificate cert;
    const int n = g.vertex_count();
    if (n == 0) {
        cert.exact = true;
        return cert;
    }
    auto adj = adjacency_bits(g);
    Deadline deadline(budget);
    CliqueSearch search{adj, deadline, greedy_clique_seed(g), {}};
    Bits cand(n), excl(n);
    for (int v = 0; v < n; ++v) cand.set(v);
    search.expand(cand, excl);
    cert.vertices = sorted_unique(search.best);
    cert.exact = !deadline.exhausted;
    cert.nodes = deadline.nodes;
    return cert;
}

namespace {

struct DsaturSearch {
    const Graph& g;
    const std::vector<Bits>& adj;
    Deadline& deadline;
    std::vector<int> color;      // 0 = uncolored
    std::vector<int> best_color;
    int upper;                   // best palette found so far
    int colored = 0;

    int pick_vertex() const {
        const int n = g.vertex_count();
        int best = -1, best_sat = -1, best_deg = -1;
        std::vector<char> seen(upper + 2, 0);
        for (int v = 0; v < n; ++v) {
            if (color[v] != 0) continue;
            int sat = 0;
            std::fill(seen.begin(), seen.end(), 0);
            for (int u : g.neighbors(v))
                if (color[u] != 0 && !seen[color[u]]) {
                    seen[color[u]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void run(int used) {
        if (!deadline.tick()) return;
        if (used >= upper) return;  // cannot improve on this branch
        if (colored == g.vertex_count()) {
            upper = used;
            best_color = color;
            return;
        }
        int v = pick_vertex();
        std::vector<char> banned(upper + 2, 0);
        for (int u : g.neighbors(v))
            if (color[u] != 0) banned[color[u]] = 1;
        int limit = std::min(used + 1, upper - 1);
        for (int c = 1; c <= limit; ++c) {
            if (banned[c]) continue;
            color[v] = c;
            ++colored;
            run(std::max(used, c));
            --colored;
            color[v] = 0;
            if (deadline.exhausted) return;
        }
    }
};

} // namespace

ChromaticResult exact_chromatic(const Graph& g, Budget budget) {
    ChromaticResult res;
    const int n = g.vertex_count();
    if (n == 0) {
        res.exact = true;
        return res;
    }

    Coloring greedy = greedy_color(g, degeneracy_ordering(g).ordering);
    Budget clique_budget = budget;
    clique_budget.max_nodes = std::min<std::uint64_t>(budget.max_nodes, 500'000);
    CliqueCertificate clique = max_clique(g, clique_budget);
    int lower = std::max(1, clique.size());

    res.coloring = greedy;
    res.upper = greedy.palette;
    res.lower = lower;
    if (lower == res.upper) {
        res.exact = true;
        return res;
    }

    auto adj = adjacency_bits(g);
    Deadline deadline(budget);
    DsaturSearch search{g, adj, deadline, std::vector<int>(n, 0), greedy.color, greedy.palette, 0};
    search.run(0);
    res.nodes = deadline.nodes;
    res.upper = search.upper;
    res.coloring.color = search.best_color;
    res.coloring.palette = search.upper;
    if (!deadline.exhausted || res.upper == lower) {
        res.exact = true;
        res.lower = res.upper;
    } else {
        res.exact = false;
        res.lower = lower;
    }
    return res;
}

namespace {

struct GreedyFromLists {
    const Graph& g;
    const Ordering& ord;
    const std::vector<std::vector<int>>& lists;  // sorted, deduplicated

    // blocked(v, u, color_of_u) -> which color of v's list is unavailable
    template <typename BlockFn>
    ListColorResult run(BlockFn blocked_color) const {
        const int n = g.vertex_count();
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[ord.sequence[i]] = i;
        ListColorResult res;
        res.coloring.color.assign(n, 0);
        std::set<int> distinct;
        for (int v : ord.sequence) {
            std::set<int> blocked;
            std::vector<std::pair<int, int>> blockers;
            for (int u : g.neighbors(v)) {
                if (pos[u] >= pos[v]) continue;
                auto b = blocked_color(v, u, res.coloring.color[u]);
                if (b && std::binary_search(lists[v].begin(), lists[v].end(), *b)) {
                    blocked.insert(*b);
                    blockers.push_back({u, res.coloring.color[u]});
                }
            }
            int pick = 0;
            bool found = false;
            for (int c : lists[v])
                if (!blocked.count(c)) {
                    pick = c;
                    found = true;
                    break;
                }
            if (!found) {
                res.success = false;
                res.failure.stuck_vertex = v;
                res.failure.list = lists[v];
                res.failure.blockers = blockers;
                for (int c : lists[v])
                    if (!blocked.count(c)) res.failure.remaining.push_back(c);
                return res;
            }
            res.coloring.color[v] = pick;
            distinct.insert(pick);
        }
        res.success = true;
        res.coloring.palette = (int)distinct.size();
        return res;
    }
};

} // namespace

ListColorResult list_color_greedy(const Graph& g, const Ordering& ord,
                                  const ListAssignment& lists) {
    Ordering checked = ordering_from_sequence(g, ord.sequence);
    if ((int)lists.lists.size() != g.vertex_count())
        throw std::invalid_argument("list assignment size mismatch");
    std::vector<std::vector<int>> norm(lists.lists.size());
    for (size_t i = 0; i < lists.lists.size(); ++i) norm[i] = sorted_unique(lists.lists[i]);
    GreedyFromLists greedy{g, checked, norm};
    return greedy.run([](int, int, int cu) { return std::optional<int>(cu); });
}

void Correspondence::set_matching(int u, int v, std::vector<std::pair<int, int>> pairs) {
    if (u == v) throw std::invalid_argument("correspondence on a loop");
    if (u > v) {
        std::swap(u, v);
        for (auto& p : pairs) std::swap(p.first, p.second);
    }
    std::vector<int> left, right;
    for (auto [a, b] : pairs) {
        left.push_back(a);
        right.push_back(b);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (std::adjacent_find(left.begin(), left.end()) != left.end() ||
        std::adjacent_find(right.begin(), right.end()) != right.end())
        throw std::invalid_argument("correspondence for edge " + std::to_string(u) + "-" +
                                    std::to_string(v) + " is not a matching");
    std::uint64_t key = (std::uint64_t)(std::uint32_t)u << 32 | (std::uint32_t)v;
    Span span;
    span.offset = (std::uint32_t)arena_.size();
    span.count = (std::uint32_t)pairs.size();
    arena_.insert(arena_.end(), pairs.begin(), pairs.end());
    index_[key] = span;
}

std::optional<int> Correspondence::matched(int u, int v, int color_of_u) const {
    bool flipped = u > v;
    if (flipped) std::swap(u, v);
    std::uint64_t key = (std::uint64_t)(std::uint32_t)u << 32 | (std::uint32_t)v;
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    for (std::uint32_t i = 0; i < it->second.count; ++i) {
        const auto& p = arena_[it->second.offset + i];
        if (!flipped && p.first == color_of_u) return p.second;
        if (flipped && p.second == color_of_u) return p.first;
    }
    return std::nullopt;
}

void Correspondence::clear() {
    index_.clear();
    arena_.clear();
}

ListColorResult correspondence_color_greedy(const Graph& g, const Ordering& ord,
                                            const ListAssignment& lists,
                                            const Correspondence& corr) {
    Ordering checked = ordering_from_sequence(g, ord.sequence);
    if ((int)lists.lists.size() != g.vertex_count())
        throw std::invalid_argument("list assignment size mismatch");
    std::vector<std::vector<int>> norm(lists.lists.size());
    for (size_t i = 0; i < lists.lists.size(); ++i) norm[i] = sorted_unique(lists.lists[i]);
    GreedyFromLists greedy{g, checked, norm};
    return greedy.run([&corr](int v, int u, int cu) { return corr.matched(u, v, cu); });
}

SquareColorWitness square_color_witness(const Graph& g) {
    SquareColorWitness w;
    w.square_graph = square(g);
    DegeneracyResult d = degeneracy_ordering(w.square_graph);
    w.square_degeneracy = d.degeneracy;
    w.ordering = d.ordering;
    w.coloring = greedy_color(w.square_graph, w.ordering);
    w.colors_used = w.coloring.palette;
    return w;
}

} // namespace sqcolor
