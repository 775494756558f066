#pragma once

#include "sqcolor/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sqcolor {

// Generator output: the graph plus machine-checkable claims about it and a
// labeling of the vertices by role. Claims are verified by the test suites,
// never trusted.
//
// Claim keys: vertices, edges, max_degree, regular, girth, degeneracy,
// degeneracy_at_most, mad (exact "p/q"), mad_below ("p/q"), square_complete,
// chi_square, square_clique_min (witness under role "square_clique").
struct ConstructionMeta {
    std::string name;
    std::map<std::string, long long> params;
    std::map<std::string, std::string> claims;
    std::map<std::string, std::vector<int>> roles;

    std::vector<std::string> comment_lines() const;  // '#'-ready key:value lines
};

struct Construction {
    Graph graph;
    ConstructionMeta meta;
};

// Named graphs: "path(n)", "cycle(n)", "petersen", "figure2",
// "figure3_full", "figure3_reduced". Unknown names throw.
Construction named_graph(const std::string& name);

// Blow-up of K_n: every edge e replaced by K_{2,t} (the t new vertices form
// the group V_e), then a length-2 path between every pair of vertices taken
// from groups of two non-incident edges. The union of the groups is pairwise
// within distance 2, giving a t*n*(n-1)/2 clique in the square.
Construction g_family(int n, int t);

// Random 2-degenerate graph: vertices arrive one at a time and join
// min(2, available) distinct earlier vertices chosen uniformly among those
// below degree_cap. Randomness is mt19937_64 on the seed with draws taken
// modulo the candidate count, so any platform reproduces the same graph.
Construction random_two_degenerate(int nv, int degree_cap, std::uint64_t seed);

} // namespace sqcolor
