#pragma once

#include <map>
#include <optional>

#include "minconn/graph.hpp"

namespace minconn {

// kappa plus, when the graph is neither complete nor empty, a minimum vertex
// separator witnessing it. Disconnected graphs get kappa 0 and an empty set.
struct ConnectivityCertificate {
  int kappa = 0;
  std::optional<VertexSet> witness_separator;
};

// Menger value for a non-adjacent pair: the maximum number of internally
// vertex-disjoint s-t paths, computed by unit-capacity max-flow on the
// vertex-split digraph. Throws std::invalid_argument if s == t or adjacent.
int local_vertex_connectivity(const Graph& g, int s, int t);

// Same, also returning one minimum s-t vertex cut.
std::pair<int, VertexSet> local_vertex_connectivity_with_cut(const Graph& g,
                                                             int s, int t);

ConnectivityCertificate vertex_connectivity(const Graph& g);

bool is_k_connected(const Graph& g, int k);

struct MinimalityReport {
  bool is_k_connected = false;
  bool is_minimal = false;
  // First edge (lexicographic) whose removal keeps the graph k-connected.
  std::optional<Edge> violating_edge;
  // For each edge e = {u, v}: a (k-1)-separator of u, v in G - e. Only
  // populated on success when requested.
  std::optional<std::map<Edge, VertexSet>> per_edge_separator;
};

// Minimally k-connected: k-connected and every single edge deletion breaks
// that. Deleting {u, v} only ever harms the pair (u, v), so each edge costs
// one local connectivity query instead of a full recomputation.
MinimalityReport is_minimally_k_connected(const Graph& g, int k,
                                          bool want_separators = false);

}  // namespace minconn
