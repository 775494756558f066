#pragma once

#include "sqcolor/graph.hpp"
#include "sqcolor/sparse_metrics.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sqcolor {

// Proper coloring with 1-based colors. For plain colorings palette is the
// largest color used; list-based colorings may use arbitrary integers from
// their lists, in which case palette counts distinct colors.
struct Coloring {
    std::vector<int> color;
    int palette = 0;
};

// First-fit along ord: each vertex takes the smallest color unused by its
// earlier neighbors. Never needs more than 1 + max back degree colors.
Coloring greedy_color(const Graph& g, const Ordering& ord);

// True iff no edge is monochromatic. Throws if a vertex has no color.
bool check_proper(const Graph& g, const Coloring& c);

// Node cap for the exact searches, plus an optional wall-clock cap
// (seconds, 0 = none). Running out is a result, not an error.
struct Budget {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 0.0;
};

struct ChromaticResult {
    int lower = 0;  // proven lower bound (equals upper when exact)
    int upper = 0;  // colors of the best coloring found
    bool exact = false;
    Coloring coloring;
    std::uint64_t nodes = 0;
};

// DSATUR branch and bound: saturation-first vertex choice (ties by degree,
// then index), clique seed for the lower bound, greedy seed for the upper.
ChromaticResult exact_chromatic(const Graph& g, Budget budget = {});

struct CliqueCertificate {
    std::vector<int> vertices;
    bool exact = false;
    std::uint64_t nodes = 0;
    int size() const { return (int)vertices.size(); }
};

// Branch and bound over candidate/excluded sets with pivoting; under an
// exhausted budget, the largest clique found so far, flagged inexact.
CliqueCertificate max_clique(const Graph& g, Budget budget = {});

struct ListAssignment {
    std::vector<std::vector<int>> lists;
};

struct ColorFailure {
    int stuck_vertex = -1;
    std::vector<int> list;                         // the stuck vertex's full list
    std::vector<int> remaining;                    // list colors still open (empty when stuck)
    std::vector<std::pair<int, int>> blockers;     // (earlier neighbor, its color)
};

struct ListColorResult {
    bool success = false;
    Coloring coloring;
    ColorFailure failure;
};

// First-fit from each vertex's own list; succeeds whenever every list is
// larger than the vertex's back degree. On failure reports the stuck vertex,
// its unblocked remainder (empty) and the assignments that blocked it.
ListColorResult list_color_greedy(const Graph& g, const Ordering& ord,
                                  const ListAssignment& lists);

// Per-edge partial bijections between endpoint lists saying which color
// pairs conflict. Each edge's relation must be a matching.
class Correspondence {
public:
    void set_matching(int u, int v, std::vector<std::pair<int, int>> pairs);
    std::optional<int> matched(int u, int v, int color_of_u) const;
    void clear();

private:
    struct Span {
        std::uint32_t offset = 0;
        std::uint32_t count = 0;
    };
    std::unordered_map<std::uint64_t, Span> index_;
    std::vector<std::pair<int, int>> arena_;  // oriented as (color of min(u,v), color of max)
};

// Like list_color_greedy, but a color is blocked when an earlier neighbor's
// chosen color maps to it under the edge's matching.
ListColorResult correspondence_color_greedy(const Graph& g, const Ordering& ord,
                                            const ListAssignment& lists,
                                            const Correspondence& corr);

struct SquareColorWitness {
    Graph square_graph;
    int square_degeneracy = 0;
    int colors_used = 0;
    Coloring coloring;   // proper on square_graph
    Ordering ordering;   // degeneracy ordering of the square
};

// square + degeneracy ordering + greedy, bundled; colors_used is at most
// degeneracy(square) + 1.
SquareColorWitness square_color_witness(const Graph& g);

} // namespace sqcolor
