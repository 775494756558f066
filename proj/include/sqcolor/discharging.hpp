#pragma once

#include "sqcolor/graph.hpp"
#include "sqcolor/rational.hpp"

#include <string>
#include <vector>

namespace sqcolor {

// Classes of 4+-vertices by d - d2 (and d3 at the 4 boundary):
//   bad            d - d2 = 3
//   weakly_bad_1   d - d2 = 4, d3 = 0
//   weakly_bad_2   d - d2 = 4, d3 = 1
//   weakly_good    d - d2 = 5
//   good           d - d2 >= 6   (nice when d - d2 >= 8)
//   other          everything else, including all 3--vertices
enum class VertexKind { bad, weakly_bad_1, weakly_bad_2, weakly_good, good, other };

const char* vertex_kind_name(VertexKind k);

struct VertexClass {
    VertexKind kind = VertexKind::other;
    bool nice = false;
    bool small_degree = false;  // d <= 3, classes apply to 4+-vertices only
};

std::vector<VertexClass> classify_vertices(const Graph& g);

// Light-vertex test for threshold k against a partner value big_d with
// k < big_d < 2k; all threshold comparisons are exact rationals. D(.) below
// counts neighbors of degree >= k+1.
//   either k+1 <= D(v) < k + big_d*k/(2*big_d-2k) and v has at most k-1
//     neighbors w with D(w) >= k^2*big_d/((big_d-k)(D(v)-k)),
//   or  k + big_d*k/(2*big_d-2k) <= D(v) < big_d*k/(big_d-k) and v has fewer
//     than D(v) - (D(v)-2k)*big_d/(2k-big_d) neighbors w with D(w) >= 2k.
bool is_d_light(const Graph& g, int k, int v, int big_d);

enum class ConfigKind { C1, C2, C3, P_small, P_bad, P_weakbad, P_weakbad2, P_weakgood, P_types };

const char* config_kind_name(ConfigKind k);

struct ConfigHit {
    ConfigKind kind;
    std::vector<int> vertices;
    std::string condition;  // the violated numeric condition, human-readable
};

// All occurrences, ordered by configuration then by witness indices.
//   C1: k--vertex u adjacent to v with D(v) <= k.
//   C2: k--vertex u with neighbor v, k < D(v) < 2k, and at most k-1
//       neighbors w of v with D(w) >= 2k^2/(D(v)-k).
//   C3: vertex u, k < D(u) < 2k, no k--neighbor, adjacent to a D(u)-light v.
std::vector<ConfigHit> detect_ghost_configs(const Graph& g, int k);

// All occurrences of the mad<4 configurations:
//   P_small     adjacent 3--vertices
//   P_bad       adjacent bad vertices
//   P_weakbad   weakly bad u with a bad neighbor v having < 2 nice neighbors
//   P_weakbad2  weakly_bad_2 vertex with no good neighbor
//   P_weakgood  weakly good vertex with >= 4 neighbors that are 3-vertices
//               or bad with at most one nice neighbor
//   P_types     a 4+-vertex that falls in class "other"
std::vector<ConfigHit> detect_mad4_configs(const Graph& g);

// The predicates behind the detectors, for re-checking hits one at a time.
bool ghost_c1(const Graph& g, int k, int u, int v);
bool ghost_c2(const Graph& g, int k, int u, int v);
bool ghost_c3(const Graph& g, int k, int u, int v);
bool mad4_small_pair(const Graph& g, int u, int v);
bool mad4_bad_pair(const Graph& g, int u, int v);
bool mad4_weakbad_pair(const Graph& g, int u, int v);
bool mad4_weakbad2_vertex(const Graph& g, int u);
bool mad4_weakgood_vertex(const Graph& g, int u);
bool mad4_unclassified_vertex(const Graph& g, int u);
bool check_config_hit(const Graph& g, int k, const ConfigHit& hit);

struct Transfer {
    int rule;
    int from;
    int to;
    Rational amount;
};

// Charges before and after the weight rules, the full transfer ledger, and
// a per-vertex verdict against the required final charge. Every rule moves
// charge between vertices, so totals are conserved.
struct WeightReport {
    enum class Mode { ghost, mad4 };
    Mode mode = Mode::mad4;
    int k = 0;  // threshold in ghost mode, 0 otherwise
    std::vector<Rational> initial;
    std::vector<Rational> final_charge;
    std::vector<Rational> required;
    std::vector<bool> happy;
    std::vector<bool> in_core;  // ghost mode: vertex has degree >= k+1
    bool core_empty = false;
    int low_degree_rule1_donors = 0;  // rule-1 donors outside the core (never expected)
    std::vector<Transfer> transfers;

    bool all_happy() const;
    Rational total_initial() const;
    Rational total_final() const;
};

// Charges start at d(v) - 2k. Rules run in order, each against a snapshot of
// the charges left by the previous one:
//   rule 0: every core vertex gives 1 to each neighbor outside the core;
//   rule 1: every vertex with D >= 2k+1 and positive charge splits all of it
//           equally among its core neighbors with D < 2k;
//   rule 2: every vertex with positive charge splits all of it equally among
//           its core neighbors with negative charge.
// A vertex is happy when its final charge reaches 0 (degree > k) or
// d(v) + D(v) - 2k (degree <= k).
WeightReport ghost_discharge(const Graph& g, int k);

// Charges start at d(v) - 4. Rules, in order:
//   rule 0: every vertex gives 1 to each 2-neighbor and 1/3 to each
//           3-neighbor;
//   rule 1: every nice vertex gives 1/2 to each bad neighbor;
//   rule 2: every non-nice 4+-vertex gives 1/3 to each bad neighbor having
//           at most one nice neighbor;
//   rule 3: every good vertex gives 1/3 to each weakly_bad_2 neighbor.
// Happy means a non-negative final charge.
WeightReport mad4_discharge(const Graph& g);

} // namespace sqcolor
