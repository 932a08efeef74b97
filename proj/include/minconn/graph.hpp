#pragma once

#include <utility>
#include <vector>

#include "minconn/errors.hpp"

namespace minconn {

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;  // always stored with first < second

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted ascending at all times so edge queries are log-time and iteration
// order is deterministic.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  long long m() const { return m_; }

  bool has_vertex(int v) const { return v >= 0 && v < n_; }
  bool has_edge(int u, int v) const;

  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  // Appends an isolated vertex and returns its id (== old n()).
  int add_vertex();

  // Both throw GraphError: loops, duplicates, unknown vertices, missing edges.
  void add_edge(int u, int v);
  void delete_edge(int u, int v);

  // Removes v; vertices above v shift down by one. Returns the relabeling map
  // old id -> new id, with map[v] == -1.
  std::vector<int> delete_vertex(int v);

  // Contracts edge {u, v} by merging v into u (neighbor union, no multi-edges,
  // no loop), then deleting v. Returns the same style of relabeling map.
  std::vector<int> contract_edge(int u, int v);

  // All edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  // Sorted ascending.
  std::vector<int> degree_sequence() const;

  int min_degree() const;
  int max_degree() const;

  bool operator==(const Graph& other) const = default;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Connected components: (count, label per vertex). Labels are assigned in
// order of the smallest vertex in each component, starting at 0.
std::pair<int, std::vector<int>> components(const Graph& g);

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_complete(const Graph& g);

// Subgraph induced by `keep` (need not be sorted; duplicates rejected).
// If old_to_new is non-null it receives the relabeling (-1 for dropped ids).
Graph induced_subgraph(const Graph& g, const VertexSet& keep,
                       std::vector<int>* old_to_new = nullptr);

}  // namespace minconn
