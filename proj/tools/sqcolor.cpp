// Command-line front end: graph generators, square/mad/degeneracy/coloring
// queries, configuration detectors, discharging reports, and the bound
// table. Commands read an edge-list graph from stdin unless -i is given and
// write to stdout unless -o is given, so they compose in pipelines.

#include "json.hpp"
#include "sqcolor/bounds.hpp"
#include "sqcolor/coloring.hpp"
#include "sqcolor/constructions.hpp"
#include "sqcolor/discharging.hpp"
#include "sqcolor/graph.hpp"
#include "sqcolor/report_json.hpp"
#include "sqcolor/sparse_metrics.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace sqcolor;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage =
    "usage: sqcolor <command> [options]\n"
    "commands:\n"
    "  gen <name | gt N T | rand2deg N CAP SEED> [-o FILE]\n"
    "      names: path(N), cycle(N), petersen, figure2, figure3_full, figure3_reduced\n"
    "  square     [-i FILE] [-o FILE]      DIMACS output when FILE ends in .col\n"
    "  mad        [-i FILE]\n"
    "  degeneracy [-i FILE] [--square]\n"
    "  color      [-i FILE] [--square] [--exact] [--budget N]\n"
    "  clique     [-i FILE] [--square] [--budget N]\n"
    "  classify   [-i FILE]\n"
    "  detect     [-i FILE] --mode <ghost K | mad4>\n"
    "  discharge  [-i FILE] --mode <ghost K | mad4>\n"
    "  bounds     --k K --from D1 --to D2 [--csv]\n"
    "  verify     [-i FILE] [--json]\n";

struct Options {
    std::string input;
    std::string output;
    bool use_square = false;
    bool exact = false;
    bool csv = false;
    bool json = false;
    std::optional<std::uint64_t> budget;
    std::string mode;
    int mode_k = 0;
    std::optional<long long> k, from, to;
    std::vector<std::string> positional;
};

long long parse_int(const std::string& s, const std::string& what) {
    std::istringstream iss(s);
    long long v;
    std::string extra;
    if (!(iss >> v) || (iss >> extra)) throw UsageError("bad " + what + " \"" + s + "\"");
    return v;
}

Options parse_options(const std::vector<std::string>& args) {
    Options o;
    for (size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto next = [&](const std::string& what) -> const std::string& {
            if (i + 1 >= args.size()) throw UsageError(a + " needs " + what);
            return args[++i];
        };
        if (a == "-i") o.input = next("a file");
        else if (a == "-o") o.output = next("a file");
        else if (a == "--square") o.use_square = true;
        else if (a == "--exact") o.exact = true;
        else if (a == "--csv") o.csv = true;
        else if (a == "--json") o.json = true;
        else if (a == "--budget") o.budget = (std::uint64_t)parse_int(next("a count"), "budget");
        else if (a == "--k") o.k = parse_int(next("a value"), "k");
        else if (a == "--from") o.from = parse_int(next("a value"), "from");
        else if (a == "--to") o.to = parse_int(next("a value"), "to");
        else if (a == "--mode") {
            o.mode = next("ghost K or mad4");
            if (o.mode == "ghost") o.mode_k = (int)parse_int(next("a threshold K"), "K");
            else if (o.mode != "mad4") throw UsageError("unknown mode \"" + o.mode + "\"");
        } else if (!a.empty() && a[0] == '-') {
            throw UsageError("unknown option \"" + a + "\"");
        } else {
            o.positional.push_back(a);
        }
    }
    return o;
}

Graph read_graph(const Options& o) {
    if (o.input.empty()) return parse_edge_list(std::cin);
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open \"" + o.input + "\"");
    return parse_edge_list(in);
}

void write_text(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw UsageError("cannot write \"" + o.output + "\"");
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string format_approx(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

Budget make_budget(const Options& o) {
    Budget b;
    if (o.budget) b.max_nodes = *o.budget;
    return b;
}

int cmd_gen(const Options& o) {
    if (o.positional.empty()) throw UsageError("gen needs a construction name");
    Construction c;
    const std::string& name = o.positional[0];
    if (name == "gt") {
        if (o.positional.size() != 3) throw UsageError("gen gt needs N and T");
        c = g_family((int)parse_int(o.positional[1], "N"), (int)parse_int(o.positional[2], "T"));
    } else if (name == "rand2deg") {
        if (o.positional.size() != 4) throw UsageError("gen rand2deg needs N, CAP and SEED");
        c = random_two_degenerate((int)parse_int(o.positional[1], "N"),
                                  (int)parse_int(o.positional[2], "CAP"),
                                  (std::uint64_t)parse_int(o.positional[3], "SEED"));
    } else if ((name == "path" || name == "cycle") && o.positional.size() == 2) {
        c = named_graph(name + "(" + o.positional[1] + ")");
    } else {
        if (o.positional.size() != 1) throw UsageError("unexpected argument after \"" + name + "\"");
        c = named_graph(name);
    }
    write_text(o, emit_edge_list(c.graph, c.meta.comment_lines()));
    return 0;
}

int cmd_square(const Options& o) {
    Graph sq = square(read_graph(o));
    if (!o.output.empty() && ends_with(o.output, ".col"))
        write_text(o, emit_dimacs(sq));
    else
        write_text(o, emit_edge_list(sq));
    return 0;
}

int cmd_mad(const Options& o) {
    Graph g = read_graph(o);
    DensestResult d = densest_subgraph(g);
    Rational m = d.density * Rational(2);
    std::ostringstream out;
    out << "mad: " << m.str() << " (~" << format_approx(m.approx()) << ")\n";
    out << "densest: " << d.density.str() << " on " << d.witness.size() << " vertices\n";
    write_text(o, out.str());
    return 0;
}

int cmd_degeneracy(const Options& o) {
    Graph g = read_graph(o);
    if (o.use_square) g = square(g);
    std::ostringstream out;
    out << "degeneracy: " << degeneracy_ordering(g).degeneracy << "\n";
    write_text(o, out.str());
    return 0;
}

int cmd_color(const Options& o) {
    Graph g = read_graph(o);
    if (o.use_square) g = square(g);
    std::ostringstream out;
    out << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\n";
    int status = 0;
    if (o.exact) {
        ChromaticResult r = exact_chromatic(g, make_budget(o));
        if (r.exact) {
            out << "chromatic: " << r.upper << " (exact, nodes=" << r.nodes << ")\n";
        } else {
            out << "chromatic in [" << r.lower << ", " << r.upper
                << "] (budget exhausted, nodes=" << r.nodes << ")\n";
            status = 2;
        }
    } else {
        DegeneracyResult d = degeneracy_ordering(g);
        Coloring c = greedy_color(g, d.ordering);
        out << "colors: " << c.palette << " (greedy along degeneracy ordering, degeneracy "
            << d.degeneracy << ")\n";
    }
    write_text(o, out.str());
    return status;
}

int cmd_clique(const Options& o) {
    Graph g = read_graph(o);
    if (o.use_square) g = square(g);
    CliqueCertificate cert = max_clique(g, make_budget(o));
    std::ostringstream out;
    if (cert.exact)
        out << "clique: " << cert.size() << " (exact, nodes=" << cert.nodes << ")\n";
    else
        out << "clique: at least " << cert.size() << " (budget exhausted, nodes=" << cert.nodes
            << ")\n";
    out << "vertices:";
    for (int v : cert.vertices) out << " " << v;
    out << "\n";
    write_text(o, out.str());
    return cert.exact ? 0 : 2;
}

int cmd_classify(const Options& o) {
    Graph g = read_graph(o);
    auto cls = classify_vertices(g);
    auto prof = degree_profile(g);
    std::map<std::string, int> counts;
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::string label = cls[v].small_degree ? "small" : vertex_kind_name(cls[v].kind);
        if (cls[v].nice) label += " nice";
        ++counts[label];
        const auto& p = prof.per_vertex[v];
        out << "v" << v << ": " << label << " (d=" << p.d << ", d2=" << p.d2 << ", d3=" << p.d3
            << ")\n";
    }
    out << "summary:";
    for (const auto& [label, count] : counts) out << " " << label << "=" << count;
    out << "\n";
    write_text(o, out.str());
    return 0;
}

std::vector<ConfigHit> run_detect(const Graph& g, const Options& o) {
    if (o.mode == "ghost") return detect_ghost_configs(g, o.mode_k);
    if (o.mode == "mad4") return detect_mad4_configs(g);
    throw UsageError("detect/discharge need --mode <ghost K | mad4>");
}

int cmd_detect(const Options& o) {
    Graph g = read_graph(o);
    auto hits = run_detect(g, o);
    ordered_json j;
    j["schema"] = 1;
    j["mode"] = o.mode;
    if (o.mode == "ghost") j["k"] = o.mode_k;
    std::map<std::string, int> counts;
    for (const auto& h : hits) ++counts[config_kind_name(h.kind)];
    j["counts"] = counts;
    j["hits"] = config_hits_json(hits);
    write_text(o, j.dump(2) + "\n");
    return 0;
}

int cmd_discharge(const Options& o) {
    Graph g = read_graph(o);
    WeightReport rep;
    if (o.mode == "ghost") rep = ghost_discharge(g, o.mode_k);
    else if (o.mode == "mad4") rep = mad4_discharge(g);
    else throw UsageError("detect/discharge need --mode <ghost K | mad4>");
    write_text(o, weight_report_json(g, rep).dump(2) + "\n");
    return 0;
}

int cmd_bounds(const Options& o) {
    if (!o.k || !o.from || !o.to) throw UsageError("bounds needs --k, --from and --to");
    BoundTable t = compare_table(*o.k, *o.from, *o.to);
    write_text(o, format_bound_table(t, o.csv));
    return 0;
}

ordered_json verify_json(const Graph& g) {
    ordered_json j;
    j["schema"] = 1;
    const long long delta = g.max_degree();
    j["graph"] = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"max_degree", delta}};

    Rational madv = mad(g);
    j["mad"] = {{"exact", madv.str()}, {"approx", madv.approx()}};

    DegeneracyResult dg = degeneracy_ordering(g);
    SquareColorWitness w = square_color_witness(g);
    j["degeneracy"] = {{"graph", dg.degeneracy}, {"square", w.square_degeneracy}};
    j["square_coloring"] = {{"colors_used", w.colors_used}};

    ordered_json bounds;
    if (delta >= 1) {
        Mad4Bounds m4 = mad4_bounds(delta);
        bounds["mad4_upper"] = m4.upper;
        bounds["mad4_lower"] = m4.lower;
        bounds["mad4_upper_in_range"] = m4.upper_in_range;
        ordered_json ghost = ordered_json::array();
        for (long long k : {2, 3}) {
            ordered_json row;
            row["k"] = k;
            row["degeneracy_bound"] = ghost_degeneracy_bound(k, delta);
            row["chromatic_bound"] = ghost_chromatic_bound(k, delta);
            row["applicable"] = madv < Rational(2 * k);
            ghost.push_back(row);
        }
        bounds["ghost"] = ghost;
        if (auto hds = hds_bound(madv, delta))
            bounds["hds"] = {{"applicable", true}, {"value", *hds}};
        else
            bounds["hds"] = {{"applicable", false}};
        if (delta >= 3) bounds["wegner_planar_target"] = wegner_bound(delta);
    }
    j["bounds"] = bounds;

    ordered_json checks = ordered_json::array();
    auto add_check = [&checks](const std::string& name, bool applicable, long long bound,
                               long long witness) {
        ordered_json c;
        c["name"] = name;
        c["applicable"] = applicable;
        c["bound"] = bound;
        c["witness"] = witness;
        c["satisfied"] = !applicable || witness <= bound;
        checks.push_back(c);
    };
    bool mad4_class = madv < Rational(4) && delta >= 8;
    add_check("square_degeneracy<=3*max_degree", mad4_class, 3 * delta, w.square_degeneracy);
    add_check("square_colors<=3*max_degree+1", mad4_class, 3 * delta + 1, w.colors_used);
    for (long long k : {2, 3}) {
        bool applies = delta >= 1 && madv < Rational(2 * k);
        add_check("square_degeneracy<=f(" + std::to_string(k) + ",max_degree)", applies,
                  delta >= 1 ? ghost_degeneracy_bound(k, delta) : 0, w.square_degeneracy);
    }
    j["checks"] = checks;

    ordered_json configs;
    {
        std::map<std::string, int> counts;
        for (const auto& h : detect_mad4_configs(g)) ++counts[config_kind_name(h.kind)];
        configs["mad4"] = counts;
    }
    for (int k : {2, 3}) {
        std::map<std::string, int> counts;
        for (const auto& h : detect_ghost_configs(g, k)) ++counts[config_kind_name(h.kind)];
        configs["ghost_k" + std::to_string(k)] = counts;
    }
    j["configs"] = configs;
    return j;
}

int cmd_verify(const Options& o) {
    Graph g = read_graph(o);
    ordered_json j = verify_json(g);
    if (o.json) {
        write_text(o, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream out;
    out << "graph: n=" << j["graph"]["n"] << " m=" << j["graph"]["m"]
        << " max_degree=" << j["graph"]["max_degree"] << "\n";
    out << "mad: " << j["mad"]["exact"].get<std::string>() << " (~"
        << format_approx(j["mad"]["approx"].get<double>()) << ")\n";
    out << "degeneracy: graph=" << j["degeneracy"]["graph"]
        << " square=" << j["degeneracy"]["square"] << "\n";
    out << "square coloring: " << j["square_coloring"]["colors_used"] << " colors\n";
    for (const auto& c : j["checks"]) {
        out << "check " << c["name"].get<std::string>() << ": ";
        if (!c["applicable"].get<bool>())
            out << "n/a";
        else
            out << (c["satisfied"].get<bool>() ? "ok" : "VIOLATED") << " (bound " << c["bound"]
                << ", witness " << c["witness"] << ")";
        out << "\n";
    }
    out << "configs:";
    for (const auto& [mode, counts] : j["configs"].items()) {
        int total = 0;
        for (const auto& [_, v] : counts.items()) total += v.get<int>();
        out << " " << mode << "=" << total;
    }
    out << "\n";
    write_text(o, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::cerr << kUsage;
        return 1;
    }
    std::string cmd = args[0];
    args.erase(args.begin());
    try {
        Options o = parse_options(args);
        if (cmd == "gen") return cmd_gen(o);
        if (cmd == "square") return cmd_square(o);
        if (cmd == "mad") return cmd_mad(o);
        if (cmd == "degeneracy") return cmd_degeneracy(o);
        if (cmd == "color") return cmd_color(o);
        if (cmd == "clique") return cmd_clique(o);
        if (cmd == "classify") return cmd_classify(o);
        if (cmd == "detect") return cmd_detect(o);
        if (cmd == "discharge") return cmd_discharge(o);
        if (cmd == "bounds") return cmd_bounds(o);
        if (cmd == "verify") return cmd_verify(o);
        std::cerr << "error: unknown command \"" << cmd << "\"\n" << kUsage;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
