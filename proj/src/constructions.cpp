#include "sqcolor/constructions.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sqcolor {

std::vector<std::string> ConstructionMeta::comment_lines() const {
    std::vector<std::string> out;
    out.push_back("construction: " + name);
    for (const auto& [key, value] : params)
        out.push_back("param " + key + ": " + std::to_string(value));
    for (const auto& [key, value] : claims) out.push_back("expect " + key + ": " + value);
    for (const auto& [key, vs] : roles) {
        std::ostringstream line;
        line << "role " << key << ":";
        for (int v : vs) line << " " << v;
        out.push_back(line.str());
    }
    return out;
}

namespace {

Construction make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    Construction c;
    c.graph = Graph(n);
    for (int i = 0; i + 1 < n; ++i) c.graph.add_edge(i, i + 1);
    c.meta.name = "path";
    c.meta.params["n"] = n;
    c.meta.claims["vertices"] = std::to_string(n);
    c.meta.claims["edges"] = std::to_string(n - 1);
    c.meta.claims["degeneracy"] = n >= 2 ? "1" : "0";
    return c;
}

Construction make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    Construction c;
    c.graph = Graph(n);
    for (int i = 0; i < n; ++i) c.graph.add_edge(i, (i + 1) % n);
    c.meta.name = "cycle";
    c.meta.params["n"] = n;
    c.meta.claims["vertices"] = std::to_string(n);
    c.meta.claims["edges"] = std::to_string(n);
    c.meta.claims["regular"] = "2";
    c.meta.claims["degeneracy"] = "2";
    c.meta.claims["mad"] = "2/1";
    return c;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Construction make_petersen() {
    Construction c;
    c.graph = Graph(10);
    for (int i = 0; i < 5; ++i) {
        c.graph.add_edge(i, (i + 1) % 5);
        c.graph.add_edge(i, i + 5);
        c.graph.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    c.meta.name = "petersen";
    c.meta.claims["vertices"] = "10";
    c.meta.claims["edges"] = "15";
    c.meta.claims["regular"] = "3";
    c.meta.claims["girth"] = "5";
    c.meta.claims["mad"] = "3/1";
    c.meta.claims["square_complete"] = "true";
    c.meta.claims["chi_square"] = "10";
    c.meta.roles["outer"] = {0, 1, 2, 3, 4};
    c.meta.roles["inner"] = {5, 6, 7, 8, 9};
    return c;
}

// 13 vertices: outer cycle 0..7, four chords, four subdivided diagonals with
// midpoints 8..11, center 12 joined to the midpoints. Diameter two.
Construction make_figure2() {
    Construction c;
    c.graph = Graph(13);
    for (int i = 0; i < 8; ++i) c.graph.add_edge(i, (i + 1) % 8);
    c.graph.add_edge(0, 5);  // chords
    c.graph.add_edge(1, 4);
    c.graph.add_edge(2, 7);
    c.graph.add_edge(3, 6);
    c.graph.add_edge(0, 8);  // subdivided diagonals
    c.graph.add_edge(8, 3);
    c.graph.add_edge(1, 9);
    c.graph.add_edge(9, 6);
    c.graph.add_edge(2, 10);
    c.graph.add_edge(10, 5);
    c.graph.add_edge(4, 11);
    c.graph.add_edge(11, 7);
    for (int m = 8; m <= 11; ++m) c.graph.add_edge(12, m);
    c.meta.name = "figure2";
    c.meta.claims["vertices"] = "13";
    c.meta.claims["edges"] = "24";
    c.meta.claims["max_degree"] = "4";
    c.meta.claims["mad"] = "48/13";
    c.meta.claims["mad_below"] = "4/1";
    c.meta.claims["square_complete"] = "true";
    c.meta.claims["chi_square"] = "13";
    c.meta.roles["outer"] = {0, 1, 2, 3, 4, 5, 6, 7};
    c.meta.roles["midpoint"] = {8, 9, 10, 11};
    c.meta.roles["center"] = {12};
    return c;
}

struct Figure3Parts {
    Graph g;
    std::vector<int> removed;  // the attachment vertex and two midpoints dropped
};

// Inner 5-cycle v1..v5 = 0..4, outer pentagram w1..w5 = 5..9 with spokes,
// attachment vertices x1..x5 = 10..14 (x_i joined to w_{i-1}, w_i, v_{i+2}),
// and the pentagram x1 x4 x2 x5 x3 with every edge subdivided (15..19).
Figure3Parts make_figure3_parts() {
    Figure3Parts parts;
    parts.g = Graph(20);
    Graph& g = parts.g;
    auto v = [](int i) { return (i - 1 + 5) % 5; };
    auto w = [](int i) { return 5 + (i - 1 + 5) % 5; };
    auto x = [](int i) { return 10 + (i - 1 + 5) % 5; };
    for (int i = 1; i <= 5; ++i) {
        g.add_edge(v(i), v(i + 1));
        g.add_edge(w(i), w(i + 2));
        g.add_edge(v(i), w(i));
        g.add_edge(x(i), v(i + 2));
        g.add_edge(x(i), w(i - 1));
        g.add_edge(x(i), w(i));
    }
    // x1-x4-x2-x5-x3-x1 with midpoints 15..19 in that order
    const int hops[5] = {1, 4, 2, 5, 3};
    for (int e = 0; e < 5; ++e) {
        int mid = 15 + e;
        g.add_edge(x(hops[e]), mid);
        g.add_edge(mid, x(hops[(e + 1) % 5]));
    }
    parts.removed = {x(1), 15, 19};  // x1 and the midpoints of x1x4, x3x1
    std::sort(parts.removed.begin(), parts.removed.end());
    return parts;
}

Construction make_figure3_full() {
    Figure3Parts parts = make_figure3_parts();
    Construction c;
    c.graph = parts.g;
    c.meta.name = "figure3_full";
    c.meta.claims["vertices"] = "20";
    c.meta.claims["edges"] = "40";
    c.meta.claims["max_degree"] = "5";
    c.meta.claims["mad"] = "4/1";
    c.meta.claims["square_clique_min"] = "15";
    c.meta.roles["inner"] = {0, 1, 2, 3, 4};
    c.meta.roles["outer"] = {5, 6, 7, 8, 9};
    c.meta.roles["attach"] = {10, 11, 12, 13, 14};
    c.meta.roles["midpoint"] = {15, 16, 17, 18, 19};
    c.meta.roles["removed_in_reduced"] = parts.removed;
    std::vector<int> clique;
    for (int i = 0; i < 15; ++i) clique.push_back(i);
    c.meta.roles["square_clique"] = clique;
    return c;
}

Construction make_figure3_reduced() {
    Figure3Parts parts = make_figure3_parts();
    const Graph& full = parts.g;
    std::vector<int> relabel(full.vertex_count(), -1);
    int next = 0;
    for (int old = 0; old < full.vertex_count(); ++old) {
        if (std::find(parts.removed.begin(), parts.removed.end(), old) == parts.removed.end())
            relabel[old] = next++;
    }
    Construction c;
    c.graph = Graph(next);
    for (int old = 0; old < full.vertex_count(); ++old) {
        if (relabel[old] < 0) continue;
        for (int nb : full.neighbors(old))
            if (relabel[nb] >= 0 && old < nb) c.graph.add_edge(relabel[old], relabel[nb]);
    }
    c.meta.name = "figure3_reduced";
    c.meta.claims["vertices"] = "17";
    c.meta.claims["edges"] = "33";
    c.meta.claims["max_degree"] = "5";
    c.meta.claims["mad_below"] = "4/1";
    c.meta.claims["chi_square"] = "14";
    c.meta.roles["inner"] = {0, 1, 2, 3, 4};
    c.meta.roles["outer"] = {5, 6, 7, 8, 9};
    c.meta.roles["attach"] = {relabel[11], relabel[12], relabel[13], relabel[14]};
    c.meta.roles["midpoint"] = {relabel[16], relabel[17], relabel[18]};
    return c;
}

bool parse_parenthesized(const std::string& name, const std::string& head, long long& arg) {
    if (name.size() < head.size() + 3) return false;
    if (name.compare(0, head.size(), head) != 0) return false;
    if (name[head.size()] != '(' || name.back() != ')') return false;
    std::string inner = name.substr(head.size() + 1, name.size() - head.size() - 2);
    std::istringstream iss(inner);
    if (!(iss >> arg)) return false;
    std::string extra;
    return !(iss >> extra);
}

} // namespace

Construction named_graph(const std::string& name) {
    long long arg = 0;
    if (parse_parenthesized(name, "path", arg)) return make_path((int)arg);
    if (parse_parenthesized(name, "cycle", arg)) return make_cycle((int)arg);
    if (name == "petersen") return make_petersen();
    if (name == "figure2") return make_figure2();
    if (name == "figure3_full") return make_figure3_full();
    if (name == "figure3_reduced") return make_figure3_reduced();
    throw std::invalid_argument("unknown construction \"" + name + "\"");
}

Construction g_family(int n, int t) {
    if (n < 4) throw std::invalid_argument("g_family needs n >= 4");
    if (t < 2) throw std::invalid_argument("g_family needs t >= 2");

    std::vector<std::pair<int, int>> base_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) base_edges.push_back({i, j});
    const int ne = (int)base_edges.size();

    int pairs = 0;
    for (int e = 0; e < ne; ++e)
        for (int f = e + 1; f < ne; ++f) {
            auto [a, b] = base_edges[e];
            auto [c, d] = base_edges[f];
            if (a != c && a != d && b != c && b != d) ++pairs;
        }

    const long long total = (long long)n + (long long)ne * t + (long long)pairs * t * t;
    Construction out;
    out.graph = Graph((int)total);
    Graph& g = out.graph;

    std::vector<std::vector<int>> group(ne);
    int next = n;
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = base_edges[e];
        for (int i = 0; i < t; ++i) {
            group[e].push_back(next);
            g.add_edge(a, next);
            g.add_edge(b, next);
            ++next;
        }
    }
    for (int e = 0; e < ne; ++e)
        for (int f = e + 1; f < ne; ++f) {
            auto [a, b] = base_edges[e];
            auto [c, d] = base_edges[f];
            if (a == c || a == d || b == c || b == d) continue;
            for (int p : group[e])
                for (int q : group[f]) {
                    g.add_edge(p, next);
                    g.add_edge(next, q);
                    ++next;
                }
        }

    ConstructionMeta& meta = out.meta;
    meta.name = "gt";
    meta.params["n"] = n;
    meta.params["t"] = t;
    meta.claims["vertices"] = std::to_string(total);
    meta.claims["edges"] = std::to_string(2LL * ne * t + 2LL * pairs * t * t);
    long long off_edges = ne - (2 * n - 3);  // edges non-incident to a fixed edge
    long long group_degree = 2 + (long long)t * off_edges;
    meta.claims["max_degree"] = std::to_string(std::max((long long)(n - 1) * t, group_degree));
    meta.claims["degeneracy"] = "2";
    meta.claims["mad_below"] = "4/1";
    meta.claims["square_clique_min"] = std::to_string((long long)t * ne);
    std::vector<int> core;
    for (int i = 0; i < n; ++i) core.push_back(i);
    meta.roles["core"] = core;
    std::vector<int> clique;
    for (int e = 0; e < ne; ++e) {
        auto [a, b] = base_edges[e];
        meta.roles["group_" + std::to_string(a) + "_" + std::to_string(b)] = group[e];
        clique.insert(clique.end(), group[e].begin(), group[e].end());
    }
    meta.roles["square_clique"] = clique;
    return out;
}

Construction random_two_degenerate(int nv, int degree_cap, std::uint64_t seed) {
    if (nv < 3) throw std::invalid_argument("random_two_degenerate needs nv >= 3");
    if (degree_cap < 2) throw std::invalid_argument("random_two_degenerate needs degree_cap >= 2");
    std::mt19937_64 rng(seed);
    Construction out;
    out.graph = Graph(nv);
    Graph& g = out.graph;
    for (int v = 1; v < nv; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (g.degree(u) < degree_cap) candidates.push_back(u);
        int joins = std::min<int>(2, (int)candidates.size());
        for (int j = 0; j < joins; ++j) {
            size_t pick = (size_t)(rng() % candidates.size());
            g.add_edge(v, candidates[pick]);
            candidates.erase(candidates.begin() + pick);
        }
    }
    out.meta.name = "rand2deg";
    out.meta.params["n"] = nv;
    out.meta.params["cap"] = degree_cap;
    out.meta.params["seed"] = (long long)seed;
    out.meta.claims["vertices"] = std::to_string(nv);
    out.meta.claims["degeneracy_at_most"] = "2";
    out.meta.claims["mad_below"] = "4/1";
    return out;
}

} // namespace sqcolor
