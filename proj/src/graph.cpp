#include "sqcolor/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqcolor {

int Graph::throw_negative() {
    throw std::invalid_argument("negative vertex count");
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, (int)nb.size());
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    return adj_[u].count(v) > 0;
}

void Graph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                                    " outside 0.." + std::to_string(n - 1));
    if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++m_;
    }
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line);
        std::string first;
        if (!(iss >> first)) continue;        // blank line
        if (first[0] == '#') continue;        // comment
        if (!have_header) {
            long long n;
            std::string extra;
            if (first != "n" || !(iss >> n) || (iss >> extra) || n < 0)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": expected header \"n <count>\"");
            g = Graph((int)n);
            have_header = true;
            continue;
        }
        long long u, v;
        std::string extra;
        std::istringstream edge(line);
        if (!(edge >> u >> v) || (edge >> extra))
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected edge \"u v\", got \"" + line + "\"");
        try {
            g.add_edge((int)u, (int)v);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_header) throw std::runtime_error("missing \"n <count>\" header line");
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    out << "n " << g.vertex_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << " " << v << "\n";
    return out.str();
}

std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

Graph square(const Graph& g) {
    Graph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int u : g.neighbors(v)) {
            if (u > v) out.add_edge(v, u);
            for (int w : g.neighbors(u))
                if (w > v) out.add_edge(v, w);
        }
    }
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.per_vertex.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto& e = p.per_vertex[v];
        e.d = g.degree(v);
        for (int u : g.neighbors(v)) {
            int du = g.degree(u);
            if (du == 2) ++e.d2;
            if (du == 3) ++e.d3;
        }
    }
    return p;
}

BigDegreeMap big_degree_count(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("degree threshold k must be >= 1");
    BigDegreeMap m;
    m.k = k;
    m.big.assign(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (g.degree(u) >= k + 1) ++m.big[v];
    return m;
}

} // namespace sqcolor
