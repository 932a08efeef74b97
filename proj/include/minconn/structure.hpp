#pragma once

#include "minconn/graph.hpp"
#include "minconn/rational.hpp"

namespace minconn {

// Decomposition of a graph relative to a connectivity order k: the vertices
// of degree exactly k, the edges among them, and the subgraph induced by the
// remaining vertices (called F here; a forest whenever the input is minimally
// k-connected).
struct StructureReport {
  int k = 0;
  VertexSet vk_set;        // vertices of degree exactly k, ascending
  long long vk = 0;        // |vk_set|
  long long ek = 0;        // edges with both ends in vk_set
  long long f_vertices = 0;
  long long f_edges = 0;
  int c_f = 0;             // connected components of F (0 when F is empty)
  bool f_is_forest = false;
  int delta = 0;           // maximum degree of the whole graph
};

StructureReport structure_report(const Graph& g, int k);

// True when the subgraph induced by the non-degree-k vertices is acyclic.
bool check_forest_lemma(const Graph& g, int k);

// True when c_F + |E_k| >= k (with F and E_k as in structure_report).
bool check_component_edge_lemma(const Graph& g, int k);

// Counting identity tying |V_k| to m, n and the decomposition:
// lhs = |V_k|, rhs = (m - n + c_F + |E_k|) / (k - 1). Requires k >= 2.
struct OxleyIdentity {
  long long lhs = 0;
  Rational rhs;
  bool holds = false;
};

OxleyIdentity oxley_identity_check(const Graph& g, int k);

}  // namespace minconn
