#include "minconn/structure.hpp"

#include <stdexcept>

namespace minconn {

StructureReport structure_report(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("structure_report: k must be >= 1");
  StructureReport r;
  r.k = k;
  r.delta = g.max_degree();
  std::vector<char> in_vk(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) == k) {
      in_vk[v] = 1;
      r.vk_set.push_back(v);
    }
  }
  r.vk = static_cast<long long>(r.vk_set.size());
  for (const auto& [u, v] : g.edges()) {
    if (in_vk[u] && in_vk[v]) ++r.ek;
  }
  VertexSet rest;
  for (int v = 0; v < g.n(); ++v) {
    if (!in_vk[v]) rest.push_back(v);
  }
  Graph f = induced_subgraph(g, rest);
  r.f_vertices = f.n();
  r.f_edges = f.m();
  r.c_f = components(f).first;
  r.f_is_forest = is_forest(f);
  return r;
}

bool check_forest_lemma(const Graph& g, int k) {
  return structure_report(g, k).f_is_forest;
}

bool check_component_edge_lemma(const Graph& g, int k) {
  StructureReport r = structure_report(g, k);
  return r.c_f + r.ek >= k;
}

OxleyIdentity oxley_identity_check(const Graph& g, int k) {
  if (k < 2) {
    throw std::invalid_argument("oxley_identity_check: k must be >= 2");
  }
  StructureReport r = structure_report(g, k);
  OxleyIdentity id;
  id.lhs = r.vk;
  id.rhs = Rational(g.m() - g.n() + r.c_f + r.ek, k - 1);
  id.holds = id.rhs.is_integer() && id.lhs == id.rhs.num();
  return id;
}

}  // namespace minconn
