#include "minconn/json_export.hpp"

#include "minconn/graph_io.hpp"

namespace minconn {

using nlohmann::json;

const char* regime_name(ParityRegime r) {
  switch (r) {
    case ParityRegime::small_m:
      return "small_m";
    case ParityRegime::large_m:
      return "large_m";
    case ParityRegime::both:
      return "both";
    case ParityRegime::neither:
      return "neither";
  }
  return "neither";
}

const char* regime_name(Regime r) {
  return r == Regime::small_m ? "small_m" : "large_m";
}

json to_json(const Rational& r) {
  return json{{"num", r.num()}, {"den", r.den()}};
}

json to_json(const StructureReport& r) {
  return json{{"k", r.k},
              {"vk_set", r.vk_set},
              {"vk", r.vk},
              {"ek", r.ek},
              {"f_vertices", r.f_vertices},
              {"f_edges", r.f_edges},
              {"c_f", r.c_f},
              {"f_is_forest", r.f_is_forest},
              {"delta", r.delta}};
}

json to_json(const BoundReport& r) {
  return json{{"k", r.k},
              {"n", r.n},
              {"m", r.m},
              {"mader", to_json(r.mader)},
              {"oxley", r.oxley},
              {"simple", r.simple},
              {"tight", r.tight},
              {"threshold_m0", to_json(r.threshold_m0)},
              {"regime", r.regime},
              {"edge_min", r.edge_min},
              {"edge_max", r.edge_max},
              {"in_edge_range", r.in_edge_range}};
}

json to_json(const ParityClass& pc) {
  json j{{"regime", regime_name(pc.regime)},
         {"feasible", pc.feasible},
         {"reason", pc.reason},
         {"n_condition_met", pc.n_condition_met}};
  if (pc.i.has_value()) {
    j["i"] = *pc.i;
  } else {
    j["i"] = nullptr;
  }
  return j;
}

json to_json(const ConstructionPlan& plan) {
  return json{{"regime", regime_name(plan.regime)},
              {"k", plan.k},
              {"n", plan.n},
              {"m", plan.m},
              {"l", plan.l},
              {"i", plan.i},
              {"j", plan.j},
              {"i_t", plan.i_t},
              {"i_s", plan.i_s}};
}

json to_json(const MinimalityReport& r) {
  json j{{"is_k_connected", r.is_k_connected}, {"is_minimal", r.is_minimal}};
  if (r.violating_edge.has_value()) {
    j["violating_edge"] = {r.violating_edge->first, r.violating_edge->second};
  } else {
    j["violating_edge"] = nullptr;
  }
  if (r.per_edge_separator.has_value()) {
    json seps = json::array();
    for (const auto& [edge, cut] : *r.per_edge_separator) {
      seps.push_back(
          {{"edge", {edge.first, edge.second}}, {"separator", cut}});
    }
    j["per_edge_separator"] = std::move(seps);
  }
  return j;
}

json to_json(const TightnessTable& t) {
  json rows = json::array();
  for (const auto& [m, row] : t.rows) {
    rows.push_back({{"m", m},
                    {"min_vk", row.min_vk},
                    {"witness_graph6", row.witness_graph6},
                    {"graph_count", row.graph_count}});
  }
  return json{{"n", t.n},
              {"k", t.k},
              {"total_graphs", t.total_graphs},
              {"rows", std::move(rows)}};
}

json to_json(const TightnessReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"graph6", v.graph6}, {"check", v.check}});
  }
  return json{{"n", r.n},
              {"k", r.k},
              {"table", to_json(r.table)},
              {"violations", std::move(violations)},
              {"bound_holds", r.bound_holds},
              {"tight_attained", r.tight_attained},
              {"per_graph_ok", r.per_graph_ok},
              {"ok", r.ok}};
}

json witness_sidecar(const Witness& w) {
  json j = to_json(w.plan);
  j["expected_vk"] = w.expected_vk;
  j["verified"] = w.verified;
  if (w.graph.n() <= 62) j["graph6"] = to_graph6(w.graph);
  return j;
}

}  // namespace minconn
