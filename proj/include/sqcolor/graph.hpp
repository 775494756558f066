#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sqcolor {

// Simple undirected graph on vertices 0..n-1. Adjacency is a sorted set per
// vertex, so there are no loops, no parallel edges, and iteration order is
// deterministic. All operations below treat graphs as immutable values.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n >= 0 ? n : throw_negative()) {}

    int vertex_count() const { return (int)adj_.size(); }
    int edge_count() const { return m_; }
    int degree(int v) const { return (int)adj_.at(v).size(); }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    const std::set<int>& neighbors(int v) const { return adj_.at(v); }

    // Inserts {u,v}; duplicates are ignored. Throws on a loop or an endpoint
    // outside 0..n-1.
    void add_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    static int throw_negative();
    std::vector<std::set<int>> adj_;
    int m_ = 0;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Edge-list text format: optional '#' comment lines, then a header line
// "n <count>", then one edge "u v" per line (0-based). Blank lines are
// skipped. Errors carry the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string emit_edge_list(const Graph& g, const std::vector<std::string>& comments = {});

// DIMACS export: "p edge n m" then one "e u v" line per edge, 1-based.
std::string emit_dimacs(const Graph& g);

// Same vertex set; u~v iff u != v and they are at distance <= 2.
Graph square(const Graph& g);

struct DegreeProfile {
    struct Entry {
        int d = 0;   // degree
        int d2 = 0;  // neighbors of degree 2
        int d3 = 0;  // neighbors of degree 3
    };
    std::vector<Entry> per_vertex;
};
DegreeProfile degree_profile(const Graph& g);

struct BigDegreeMap {
    int k = 0;
    std::vector<int> big;  // big[v] = #neighbors of degree >= k+1
};
BigDegreeMap big_degree_count(const Graph& g, int k);

} // namespace sqcolor
