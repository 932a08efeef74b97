#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "minconn/graph.hpp"

namespace minconn {

// Exhaustive enumeration is guaranteed (and capped) up to this many vertices.
inline constexpr int oracle_max_n = 8;

// Visits every labeled simple graph on n vertices that is minimally
// k-connected, exactly once, in a fixed deterministic order; returns how
// many there are. Pruning is restricted to facts that lose nothing: the
// edge count range of minimally k-connected graphs and min degree >= k.
// Throws InfeasibleError when n exceeds the envelope.
long long enumerate_min_k_connected(
    int n, int k, const std::function<void(const Graph&)>& on_found);

struct OracleRow {
  long long min_vk = 0;
  Graph witness;  // tie-break: smallest graph6 string among minimisers
  std::string witness_graph6;
  long long graph_count = 0;  // labeled graphs with this edge count
};

struct TightnessTable {
  int n = 0;
  int k = 0;
  long long total_graphs = 0;
  std::map<long long, OracleRow> rows;  // keyed by m; only nonempty rows
};

// True minimum of |V_k| per edge count, by exhaustive search. Parallel over
// fixed search-space partitions; the merge is order-independent, so the
// result is identical for any worker count (MINCONN_THREADS bounds it).
TightnessTable min_vk_table(int n, int k);

struct TightnessViolation {
  std::string graph6;  // offending graph; empty for per-m table failures
  std::string check;
};

struct TightnessReport {
  int n = 0;
  int k = 0;
  TightnessTable table;
  std::vector<TightnessViolation> violations;
  bool bound_holds = true;     // min_vk >= tight_lower on every row
  bool tight_attained = true;  // equality wherever the planner is feasible
  bool per_graph_ok = true;    // structural and bound checks on every graph
  bool ok = false;
};

// Checks, against the enumeration: the lower bound on every row, equality
// at every parity-feasible m (n > 2k), and on every single graph the forest
// and component-edge lemmas, the counting identity, all lower bounds, the
// degree facts vk >= delta and vk >= k + 1, and the edge range. Requires
// k >= 2 and the envelope.
TightnessReport verify_tightness(int n, int k);

// Reference implementations by exhaustive separator search (no flow), for
// cross-checking the connectivity module. Usable for any n <= 62.
int brute_force_vertex_connectivity(const Graph& g);
bool brute_force_is_k_connected(const Graph& g, int k);
bool brute_force_is_minimally_k_connected(const Graph& g, int k);

}  // namespace minconn
