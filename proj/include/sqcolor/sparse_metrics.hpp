#pragma once

#include "sqcolor/graph.hpp"
#include "sqcolor/rational.hpp"

#include <vector>

namespace sqcolor {

struct DensestResult {
    Rational density;          // max |E(H)|/|V(H)| over nonempty induced H
    std::vector<int> witness;  // sorted vertex set achieving it
};

// Exact densest subgraph. Binary search over candidate densities, each guess
// decided by an integer max-flow cut; the loop stops once the bracketing
// interval can hold at most one rational with denominator <= n, which pins
// the answer exactly. The witness comes out of the final min-cut.
DensestResult densest_subgraph(const Graph& g);

// 2 * densest_subgraph(g).density.
Rational mad(const Graph& g);

struct Ordering {
    std::vector<int> sequence;     // permutation of 0..n-1
    std::vector<int> back_degree;  // back_degree[v] = neighbors of v earlier in sequence
};

// Builds an Ordering from an explicit sequence, computing back degrees.
// Throws if the sequence is not a permutation of the graph's vertices.
Ordering ordering_from_sequence(const Graph& g, std::vector<int> sequence);

struct DegeneracyResult {
    int degeneracy = 0;
    Ordering ordering;
};

// Minimum-degree peel, smallest index first among ties. The sequence lists
// vertices in reverse removal order, so each vertex's earlier neighbors are
// exactly those still present when it was removed; the maximum back degree
// equals the degeneracy.
DegeneracyResult degeneracy_ordering(const Graph& g);

// True iff every vertex has at most d neighbors earlier in ord.
bool verify_ordering(const Graph& g, const Ordering& ord, int d);

} // namespace sqcolor
