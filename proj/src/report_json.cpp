#include "sqcolor/report_json.hpp"

namespace sqcolor {

using nlohmann::ordered_json;

ordered_json weight_report_json(const Graph& g, const WeightReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["mode"] = rep.mode == WeightReport::Mode::ghost ? "ghost" : "mad4";
    if (rep.mode == WeightReport::Mode::ghost) {
        j["k"] = rep.k;
        j["core_empty"] = rep.core_empty;
    }
    ordered_json vertices = ordered_json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        ordered_json jv;
        jv["v"] = v;
        jv["degree"] = g.degree(v);
        jv["initial"] = rep.initial[v].str();
        jv["final"] = rep.final_charge[v].str();
        jv["required"] = rep.required[v].str();
        jv["happy"] = (bool)rep.happy[v];
        if (rep.mode == WeightReport::Mode::ghost) jv["in_core"] = (bool)rep.in_core[v];
        vertices.push_back(jv);
    }
    j["vertices"] = vertices;
    ordered_json transfers = ordered_json::array();
    for (const auto& t : rep.transfers) {
        ordered_json jt;
        jt["rule"] = t.rule;
        jt["from"] = t.from;
        jt["to"] = t.to;
        jt["amount"] = t.amount.str();
        transfers.push_back(jt);
    }
    j["transfers"] = transfers;
    j["total_initial"] = rep.total_initial().str();
    j["total_final"] = rep.total_final().str();
    j["all_happy"] = rep.all_happy();
    return j;
}

ordered_json config_hits_json(const std::vector<ConfigHit>& hits) {
    ordered_json arr = ordered_json::array();
    for (const auto& h : hits) {
        ordered_json jh;
        jh["prop"] = config_kind_name(h.kind);
        jh["vertices"] = h.vertices;
        jh["condition"] = h.condition;
        arr.push_back(jh);
    }
    return arr;
}

} // namespace sqcolor
