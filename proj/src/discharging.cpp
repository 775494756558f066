#include "sqcolor/discharging.hpp"

#include <sstream>
#include <stdexcept>

namespace sqcolor {

const char* vertex_kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::bad: return "bad";
        case VertexKind::weakly_bad_1: return "weakly_bad_1";
        case VertexKind::weakly_bad_2: return "weakly_bad_2";
        case VertexKind::weakly_good: return "weakly_good";
        case VertexKind::good: return "good";
        default: return "other";
    }
}

const char* config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::C1: return "C1";
        case ConfigKind::C2: return "C2";
        case ConfigKind::C3: return "C3";
        case ConfigKind::P_small: return "P_small";
        case ConfigKind::P_bad: return "P_bad";
        case ConfigKind::P_weakbad: return "P_weakbad";
        case ConfigKind::P_weakbad2: return "P_weakbad2";
        case ConfigKind::P_weakgood: return "P_weakgood";
        default: return "P_types";
    }
}

std::vector<VertexClass> classify_vertices(const Graph& g) {
    DegreeProfile prof = degree_profile(g);
    std::vector<VertexClass> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& p = prof.per_vertex[v];
        VertexClass& c = out[v];
        if (p.d <= 3) {
            c.small_degree = true;
            continue;
        }
        int gap = p.d - p.d2;
        if (gap == 3)
            c.kind = VertexKind::bad;
        else if (gap == 4 && p.d3 == 0)
            c.kind = VertexKind::weakly_bad_1;
        else if (gap == 4 && p.d3 == 1)
            c.kind = VertexKind::weakly_bad_2;
        else if (gap == 5)
            c.kind = VertexKind::weakly_good;
        else if (gap >= 6)
            c.kind = VertexKind::good;
        else
            c.kind = VertexKind::other;
        c.nice = gap >= 8;
    }
    return out;
}

namespace {

bool d_light_impl(const Graph& g, const BigDegreeMap& dm, int k, int v, int big_d) {
    if (!(k < big_d && big_d < 2 * k))
        throw std::invalid_argument("light test needs k < D < 2k");
    const Rational dv(dm.big[v]);
    const Rational split = Rational(k) + Rational((long long)big_d * k, 2LL * big_d - 2 * k);
    if (Rational(k + 1) <= dv && dv < split) {
        // threshold k^2 * D / ((D-k) * (D(v)-k))
        Rational thr((long long)k * k * big_d, (long long)(big_d - k) * (dm.big[v] - k));
        int heavy = 0;
        for (int w : g.neighbors(v))
            if (Rational(dm.big[w]) >= thr) ++heavy;
        return heavy <= k - 1;
    }
    const Rational top((long long)big_d * k, big_d - k);
    if (split <= dv && dv < top) {
        Rational cap = dv - Rational((long long)(dm.big[v] - 2 * k) * big_d, 2LL * k - big_d);
        int heavy = 0;
        for (int w : g.neighbors(v))
            if (dm.big[w] >= 2 * k) ++heavy;
        return Rational(heavy) < cap;
    }
    return false;
}

bool c1_impl(const Graph& g, const BigDegreeMap& dm, int k, int u, int v) {
    return g.degree(u) <= k && g.has_edge(u, v) && dm.big[v] <= k;
}

bool c2_impl(const Graph& g, const BigDegreeMap& dm, int k, int u, int v) {
    if (!(g.degree(u) <= k && g.has_edge(u, v))) return false;
    int dv = dm.big[v];
    if (!(k < dv && dv < 2 * k)) return false;
    Rational thr(2LL * k * k, dv - k);
    int heavy = 0;
    for (int w : g.neighbors(v))
        if (Rational(dm.big[w]) >= thr) ++heavy;
    return heavy <= k - 1;
}

bool c3_impl(const Graph& g, const BigDegreeMap& dm, int k, int u, int v) {
    int du = dm.big[u];
    if (!(k < du && du < 2 * k)) return false;
    for (int w : g.neighbors(u))
        if (g.degree(w) <= k) return false;
    return g.has_edge(u, v) && d_light_impl(g, dm, k, v, du);
}

} // namespace

bool is_d_light(const Graph& g, int k, int v, int big_d) {
    return d_light_impl(g, big_degree_count(g, k), k, v, big_d);
}

bool ghost_c1(const Graph& g, int k, int u, int v) {
    return c1_impl(g, big_degree_count(g, k), k, u, v);
}
bool ghost_c2(const Graph& g, int k, int u, int v) {
    return c2_impl(g, big_degree_count(g, k), k, u, v);
}
bool ghost_c3(const Graph& g, int k, int u, int v) {
    return c3_impl(g, big_degree_count(g, k), k, u, v);
}

std::vector<ConfigHit> detect_ghost_configs(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("ghost configurations need k >= 2");
    const BigDegreeMap dm = big_degree_count(g, k);
    std::vector<ConfigHit> hits;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) > k) continue;
        for (int v : g.neighbors(u))
            if (dm.big[v] <= k) {
                std::ostringstream cond;
                cond << "d(" << u << ")=" << g.degree(u) << "<=" << k << " and D(" << v
                     << ")=" << dm.big[v] << "<=" << k;
                hits.push_back({ConfigKind::C1, {u, v}, cond.str()});
            }
    }
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) > k) continue;
        for (int v : g.neighbors(u))
            if (c2_impl(g, dm, k, u, v)) {
                std::ostringstream cond;
                cond << "d(" << u << ")<=" << k << ", " << k << "<D(" << v << ")=" << dm.big[v]
                     << "<" << 2 * k << ", few heavy neighbors";
                hits.push_back({ConfigKind::C2, {u, v}, cond.str()});
            }
    }
    for (int u = 0; u < n; ++u) {
        int du = dm.big[u];
        if (!(k < du && du < 2 * k)) continue;
        bool small_neighbor = false;
        for (int w : g.neighbors(u))
            if (g.degree(w) <= k) {
                small_neighbor = true;
                break;
            }
        if (small_neighbor) continue;
        for (int v : g.neighbors(u))
            if (d_light_impl(g, dm, k, v, du)) {
                std::ostringstream cond;
                cond << "D(" << u << ")=" << du << ", no " << k << "--neighbor, " << v << " is "
                     << du << "-light";
                hits.push_back({ConfigKind::C3, {u, v}, cond.str()});
            }
    }
    return hits;
}

namespace {

struct Mad4View {
    DegreeProfile prof;
    std::vector<VertexClass> cls;

    explicit Mad4View(const Graph& g) : prof(degree_profile(g)), cls(classify_vertices(g)) {}

    bool bad(int v) const { return cls[v].kind == VertexKind::bad; }
    bool weakly_bad(int v) const {
        return cls[v].kind == VertexKind::weakly_bad_1 || cls[v].kind == VertexKind::weakly_bad_2;
    }
    int nice_neighbors(const Graph& g, int v) const {
        int c = 0;
        for (int u : g.neighbors(v))
            if (cls[u].nice) ++c;
        return c;
    }
    // neighbors that are 3-vertices or bad with at most one nice neighbor
    int needy_neighbors(const Graph& g, int v) const {
        int c = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) == 3 || (bad(u) && nice_neighbors(g, u) <= 1)) ++c;
        return c;
    }
};

} // namespace

bool mad4_small_pair(const Graph& g, int u, int v) {
    return u != v && g.has_edge(u, v) && g.degree(u) <= 3 && g.degree(v) <= 3;
}

bool mad4_bad_pair(const Graph& g, int u, int v) {
    Mad4View view(g);
    return u != v && g.has_edge(u, v) && view.bad(u) && view.bad(v);
}

bool mad4_weakbad_pair(const Graph& g, int u, int v) {
    Mad4View view(g);
    return view.weakly_bad(u) && g.has_edge(u, v) && view.bad(v) &&
           view.nice_neighbors(g, v) < 2;
}

bool mad4_weakbad2_vertex(const Graph& g, int u) {
    Mad4View view(g);
    if (view.cls[u].kind != VertexKind::weakly_bad_2) return false;
    for (int w : g.neighbors(u))
        if (view.cls[w].kind == VertexKind::good) return false;
    return true;
}

bool mad4_weakgood_vertex(const Graph& g, int u) {
    Mad4View view(g);
    return view.cls[u].kind == VertexKind::weakly_good && view.needy_neighbors(g, u) >= 4;
}

bool mad4_unclassified_vertex(const Graph& g, int u) {
    Mad4View view(g);
    return g.degree(u) >= 4 && view.cls[u].kind == VertexKind::other;
}

std::vector<ConfigHit> detect_mad4_configs(const Graph& g) {
    Mad4View view(g);
    std::vector<ConfigHit> hits;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && g.degree(u) <= 3 && g.degree(v) <= 3) {
                std::ostringstream cond;
                cond << "d(" << u << ")=" << g.degree(u) << " and d(" << v << ")=" << g.degree(v)
                     << " both <= 3, adjacent";
                hits.push_back({ConfigKind::P_small, {u, v}, cond.str()});
            }
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v && view.bad(u) && view.bad(v))
                hits.push_back({ConfigKind::P_bad, {u, v}, "adjacent bad vertices"});
    for (int u = 0; u < n; ++u) {
        if (!view.weakly_bad(u)) continue;
        for (int v : g.neighbors(u))
            if (view.bad(v) && view.nice_neighbors(g, v) < 2) {
                std::ostringstream cond;
                cond << "weakly bad " << u << " with bad neighbor " << v << " having "
                     << view.nice_neighbors(g, v) << " nice neighbors";
                hits.push_back({ConfigKind::P_weakbad, {u, v}, cond.str()});
            }
    }
    for (int u = 0; u < n; ++u) {
        if (view.cls[u].kind != VertexKind::weakly_bad_2) continue;
        bool has_good = false;
        for (int w : g.neighbors(u))
            if (view.cls[w].kind == VertexKind::good) {
                has_good = true;
                break;
            }
        if (!has_good)
            hits.push_back({ConfigKind::P_weakbad2, {u}, "weakly_bad_2 with no good neighbor"});
    }
    for (int u = 0; u < n; ++u)
        if (view.cls[u].kind == VertexKind::weakly_good && view.needy_neighbors(g, u) >= 4) {
            std::ostringstream cond;
            cond << "weakly good with " << view.needy_neighbors(g, u)
                 << " neighbors of degree 3 or bad with <= 1 nice neighbor";
            hits.push_back({ConfigKind::P_weakgood, {u}, cond.str()});
        }
    for (int u = 0; u < n; ++u)
        if (g.degree(u) >= 4 && view.cls[u].kind == VertexKind::other) {
            std::ostringstream cond;
            cond << "4+-vertex with d-d2=" << view.prof.per_vertex[u].d - view.prof.per_vertex[u].d2
                 << ", d3=" << view.prof.per_vertex[u].d3 << " falls outside every class";
            hits.push_back({ConfigKind::P_types, {u}, cond.str()});
        }
    return hits;
}

bool check_config_hit(const Graph& g, int k, const ConfigHit& hit) {
    const auto& vs = hit.vertices;
    switch (hit.kind) {
        case ConfigKind::C1: return ghost_c1(g, k, vs.at(0), vs.at(1));
        case ConfigKind::C2: return ghost_c2(g, k, vs.at(0), vs.at(1));
        case ConfigKind::C3: return ghost_c3(g, k, vs.at(0), vs.at(1));
        case ConfigKind::P_small: return mad4_small_pair(g, vs.at(0), vs.at(1));
        case ConfigKind::P_bad: return mad4_bad_pair(g, vs.at(0), vs.at(1));
        case ConfigKind::P_weakbad: return mad4_weakbad_pair(g, vs.at(0), vs.at(1));
        case ConfigKind::P_weakbad2: return mad4_weakbad2_vertex(g, vs.at(0));
        case ConfigKind::P_weakgood: return mad4_weakgood_vertex(g, vs.at(0));
        default: return mad4_unclassified_vertex(g, vs.at(0));
    }
}

bool WeightReport::all_happy() const {
    for (bool h : happy)
        if (!h) return false;
    return true;
}

Rational WeightReport::total_initial() const {
    Rational t;
    for (const auto& w : initial) t += w;
    return t;
}

Rational WeightReport::total_final() const {
    Rational t;
    for (const auto& w : final_charge) t += w;
    return t;
}

WeightReport ghost_discharge(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("ghost discharging needs k >= 2");
    const int n = g.vertex_count();
    const BigDegreeMap dm = big_degree_count(g, k);
    WeightReport rep;
    rep.mode = WeightReport::Mode::ghost;
    rep.k = k;
    rep.initial.resize(n);
    rep.in_core.assign(n, false);
    bool any_core = false;
    for (int v = 0; v < n; ++v) {
        rep.initial[v] = Rational(g.degree(v) - 2LL * k);
        rep.in_core[v] = g.degree(v) >= k + 1;
        any_core = any_core || rep.in_core[v];
    }
    rep.core_empty = !any_core;

    std::vector<Rational> charge = rep.initial;

    // rule 0: core vertices pay 1 to each neighbor outside the core
    for (int u = 0; u < n; ++u) {
        if (!rep.in_core[u]) continue;
        for (int w : g.neighbors(u))
            if (!rep.in_core[w]) {
                charge[u] -= 1;
                charge[w] += 1;
                rep.transfers.push_back({0, u, w, Rational(1)});
            }
    }

    // rule 1: heavy-D vertices spread their whole (positive) charge over
    // core neighbors with D < 2k, all against the post-rule-0 snapshot
    std::vector<Rational> snapshot = charge;
    for (int u = 0; u < n; ++u) {
        if (dm.big[u] < 2 * k + 1) continue;
        if (!rep.in_core[u]) ++rep.low_degree_rule1_donors;
        if (snapshot[u] <= Rational(0)) continue;
        std::vector<int> takers;
        for (int v : g.neighbors(u))
            if (rep.in_core[v] && dm.big[v] < 2 * k) takers.push_back(v);
        if (takers.empty()) continue;
        Rational share = snapshot[u] / Rational((long long)takers.size());
        for (int v : takers) {
            charge[v] += share;
            rep.transfers.push_back({1, u, v, share});
        }
        charge[u] -= snapshot[u];
    }

    // rule 2: positive charge flows to negative core neighbors
    snapshot = charge;
    for (int u = 0; u < n; ++u) {
        if (snapshot[u] <= Rational(0)) continue;
        std::vector<int> takers;
        for (int v : g.neighbors(u))
            if (rep.in_core[v] && snapshot[v] < Rational(0)) takers.push_back(v);
        if (takers.empty()) continue;
        Rational share = snapshot[u] / Rational((long long)takers.size());
        for (int v : takers) {
            charge[v] += share;
            rep.transfers.push_back({2, u, v, share});
        }
        charge[u] -= snapshot[u];
    }

    rep.final_charge = std::move(charge);
    rep.required.resize(n);
    rep.happy.assign(n, false);
    for (int v = 0; v < n; ++v) {
        rep.required[v] = g.degree(v) > k
                              ? Rational(0)
                              : Rational(g.degree(v) + (long long)dm.big[v] - 2 * k);
        rep.happy[v] = rep.final_charge[v] >= rep.required[v];
    }
    return rep;
}

WeightReport mad4_discharge(const Graph& g) {
    const int n = g.vertex_count();
    Mad4View view(g);
    const std::vector<VertexClass>& cls = view.cls;
    WeightReport rep;
    rep.mode = WeightReport::Mode::mad4;
    rep.initial.resize(n);
    for (int v = 0; v < n; ++v) rep.initial[v] = Rational(g.degree(v) - 4LL);
    std::vector<Rational> charge = rep.initial;

    // rule 0: everyone pays 1 per 2-neighbor and 1/3 per 3-neighbor
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u)) {
            if (g.degree(w) == 2) {
                charge[u] -= 1;
                charge[w] += 1;
                rep.transfers.push_back({0, u, w, Rational(1)});
            } else if (g.degree(w) == 3) {
                charge[u] -= Rational(1, 3);
                charge[w] += Rational(1, 3);
                rep.transfers.push_back({0, u, w, Rational(1, 3)});
            }
        }

    // rule 1: nice -> bad neighbors, 1/2 each
    for (int u = 0; u < n; ++u) {
        if (!cls[u].nice) continue;
        for (int w : g.neighbors(u))
            if (cls[w].kind == VertexKind::bad) {
                charge[u] -= Rational(1, 2);
                charge[w] += Rational(1, 2);
                rep.transfers.push_back({1, u, w, Rational(1, 2)});
            }
    }

    // rule 2: non-nice 4+ -> bad neighbors with at most one nice neighbor
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 4 || cls[u].nice) continue;
        for (int w : g.neighbors(u))
            if (cls[w].kind == VertexKind::bad && view.nice_neighbors(g, w) <= 1) {
                charge[u] -= Rational(1, 3);
                charge[w] += Rational(1, 3);
                rep.transfers.push_back({2, u, w, Rational(1, 3)});
            }
    }

    // rule 3: good -> weakly_bad_2 neighbors, 1/3 each
    for (int u = 0; u < n; ++u) {
        if (cls[u].kind != VertexKind::good) continue;
        for (int w : g.neighbors(u))
            if (cls[w].kind == VertexKind::weakly_bad_2) {
                charge[u] -= Rational(1, 3);
                charge[w] += Rational(1, 3);
                rep.transfers.push_back({3, u, w, Rational(1, 3)});
            }
    }

    rep.final_charge = std::move(charge);
    rep.required.assign(n, Rational(0));
    rep.happy.assign(n, false);
    for (int v = 0; v < n; ++v) rep.happy[v] = rep.final_charge[v] >= Rational(0);
    return rep;
}

} // namespace sqcolor
