#include "sqcolor/sparse_metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sqcolor {

namespace {

struct Dinic {
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> g;
    std::vector<int> level, iter;

    explicit Dinic(int n) : g(n), level(n), iter(n) {}

    void add_arc(int from, int to, long long cap) {
        g[from].push_back({to, cap, (int)g[to].size()});
        g[to].push_back({from, 0, (int)g[from].size() - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : g[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < (int)g[v].size(); ++i) {
            Arc& a = g[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                long long d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    g[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }

    // Nodes that cannot reach t in the residual network; with the source
    // removed this is the largest min-cut source side.
    std::vector<char> cannot_reach(int t) const {
        std::vector<char> reach(g.size(), 0);
        std::queue<int> q;
        reach[t] = 1;
        q.push(t);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (const Arc& a : g[x]) {
                // residual capacity of (a.to -> x)
                if (g[a.to][a.rev].cap > 0 && !reach[a.to]) {
                    reach[a.to] = 1;
                    q.push(a.to);
                }
            }
        }
        std::vector<char> out(g.size());
        for (size_t i = 0; i < g.size(); ++i) out[i] = !reach[i];
        return out;
    }
};

// Network for the decision "is there a nonempty V1 with |E(V1)|/|V1| > a/b":
// source -> v with capacity m*b, v -> sink with capacity m*b + 2a - d(v)*b,
// and both directions of every edge with capacity b. Cutting on the source
// side of V1 costs n*m*b + 2a*|V1| - 2b*|E(V1)|, so the max flow dips below
// n*m*b exactly when a denser-than-a/b subgraph exists.
struct DensityGuess {
    const Graph& g;
    long long a, b;

    Dinic build() const {
        const int n = g.vertex_count();
        const long long m = g.edge_count();
        const long long mb = m * b;
        Dinic net(n + 2);
        const int s = n, t = n + 1;
        for (int v = 0; v < n; ++v) {
            net.add_arc(s, v, mb);
            net.add_arc(v, t, mb + 2 * a - (long long)g.degree(v) * b);
            for (int u : g.neighbors(v))
                if (u > v) {
                    net.add_arc(v, u, b);
                    net.add_arc(u, v, b);
                }
        }
        return net;
    }

    bool denser_exists() const {
        Dinic net = build();
        const int n = g.vertex_count();
        long long full = (long long)n * g.edge_count() * b;
        return net.max_flow(n, n + 1) < full;
    }

    std::vector<int> max_cut_side() const {
        Dinic net = build();
        const int n = g.vertex_count();
        net.max_flow(n, n + 1);
        std::vector<char> side = net.cannot_reach(n + 1);
        std::vector<int> out;
        for (int v = 0; v < n; ++v)
            if (side[v]) out.push_back(v);
        return out;
    }
};

long long edges_inside(const Graph& g, const std::vector<int>& vs) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vs) in[v] = 1;
    long long cnt = 0;
    for (int v : vs)
        for (int u : g.neighbors(v))
            if (in[u] && u > v) ++cnt;
    return cnt;
}

} // namespace

DensestResult densest_subgraph(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {Rational(0), {}};
    if (g.edge_count() == 0) return {Rational(0), {0}};
    if ((long long)n * g.edge_count() > (1LL << 34))
        throw std::overflow_error("graph too large for exact densest-subgraph search");

    Rational lo(0), hi(n);  // density in (lo, hi], decided strictly at lo
    const Rational gap(1, (long long)n * n);
    while (hi - lo > gap) {
        Rational mid = (lo + hi) / Rational(2);
        if (DensityGuess{g, mid.num(), mid.den()}.denser_exists())
            lo = mid;
        else
            hi = mid;
    }

    // The true density is a fraction with denominator <= n, and (lo, hi] is
    // now narrow enough to contain only one such fraction.
    Rational answer;
    bool found = false;
    for (long long q = 1; q <= n && !found; ++q) {
        long long p = (long long)((__int128)hi.num() * q / hi.den());
        Rational cand(p, q);
        if (cand > lo && cand <= hi) {
            answer = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("densest-subgraph search lost its bracket");

    DensestResult result;
    result.density = answer;
    result.witness = DensityGuess{g, answer.num(), answer.den()}.max_cut_side();
    if (result.witness.empty())
        throw std::logic_error("densest-subgraph witness extraction failed");
    Rational check(edges_inside(g, result.witness), (long long)result.witness.size());
    if (check != answer) throw std::logic_error("densest-subgraph witness density mismatch");
    return result;
}

Rational mad(const Graph& g) {
    return densest_subgraph(g).density * Rational(2);
}

Ordering ordering_from_sequence(const Graph& g, std::vector<int> sequence) {
    const int n = g.vertex_count();
    if ((int)sequence.size() != n)
        throw std::invalid_argument("ordering length does not match vertex count");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = sequence[i];
        if (v < 0 || v >= n || pos[v] != -1)
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        pos[v] = i;
    }
    Ordering ord;
    ord.sequence = std::move(sequence);
    ord.back_degree.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (pos[u] < pos[v]) ++ord.back_degree[v];
    return ord;
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n), removal;
    std::vector<char> removed(n, 0);
    int max_deg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::set<int>> bucket(max_deg + 1);
    for (int v = 0; v < n; ++v) bucket[deg[v]].insert(v);

    DegeneracyResult res;
    std::vector<int> peel_degree(n, 0);
    removal.reserve(n);
    for (int step = 0; step < n; ++step) {
        int d = 0;
        while (bucket[d].empty()) ++d;
        int v = *bucket[d].begin();
        bucket[d].erase(bucket[d].begin());
        removed[v] = 1;
        peel_degree[v] = d;
        res.degeneracy = std::max(res.degeneracy, d);
        removal.push_back(v);
        for (int u : g.neighbors(v)) {
            if (removed[u]) continue;
            bucket[deg[u]].erase(u);
            --deg[u];
            bucket[deg[u]].insert(u);
        }
    }
    std::reverse(removal.begin(), removal.end());
    res.ordering.sequence = std::move(removal);
    res.ordering.back_degree = std::move(peel_degree);
    return res;
}

bool verify_ordering(const Graph& g, const Ordering& ord, int d) {
    Ordering checked = ordering_from_sequence(g, ord.sequence);
    for (int b : checked.back_degree)
        if (b > d) return false;
    return true;
}

} // namespace sqcolor
