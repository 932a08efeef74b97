#pragma once

#include <utility>
#include <vector>

#include "minconn/graph.hpp"
#include "minconn/plan.hpp"

namespace minconn {

// Tree shape used as the template of the base family.
struct TreeScaffold {
  enum class Kind { path, star, custom };
  Kind kind = Kind::path;
  Graph tree;
};

TreeScaffold path_scaffold(long long l);
// Center is vertex 0; requires l - 1 <= k + 1 at build time.
TreeScaffold star_scaffold(long long l);
TreeScaffold custom_scaffold(const Graph& tree);

// Bookkeeping of the base graph. rows[v][c] is copy c of tree vertex v
// (id c * l + v); added[v] lists the filler vertices joined across row v
// (ids from k * l on, grouped by v); layer_of maps every vertex to its v.
struct ScaffoldLayout {
  int k = 0;
  long long l = 0;
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> added;
  std::vector<int> layer_of;
};

// k disjoint copies of the tree plus, for every tree vertex v,
// k + 1 - deg(v) fillers joined to all k copies of v. Copy vertices end at
// degree k + 1 and fillers at degree k, so the graph has
// n = (2k - 1) l + 2 vertices, m = k (k l + 1) edges and (k - 1) l + 2
// vertices of degree k. Requires a tree with max degree <= k + 1.
std::pair<Graph, ScaffoldLayout> build_base(const TreeScaffold& scaffold,
                                            int k);

enum class PathEnd { s, t };

// Reroutes x units at one end of a path-scaffold base: unit z moves the
// outgoing edge of copy 2z - 1 onto filler z - 1 and cuts that filler off
// copy 2z - 2. Each unit removes one edge net and turns two copy vertices
// into degree-k vertices without disturbing anything else. Requires
// 2 x <= k; layers must still be pristine at that end.
void delete_x_matching(Graph& g, const ScaffoldLayout& layout, PathEnd end,
                       long long x);

// Below-threshold witness: path base, i_t + i_s rerouted units, then j
// filler deletions (one per layer, inner layers first, then s, then t).
Graph build_small_m(const ConstructionPlan& plan);

// Single-layer variant for l == 1, i >= 1: starts from the complete
// bipartite base and swaps i edge pairs into the filler side.
Graph build_small_m_l1(const ConstructionPlan& plan);

// Above-threshold witness: path base, j extra degree-k vertices joined to
// rows round-robin, then i leaf edges of the first copies contracted.
Graph build_large_m(const ConstructionPlan& plan);

struct Witness {
  Graph graph;
  ConstructionPlan plan;
  long long expected_vk = 0;
  bool verified = false;
};

// Regime dispatch: small planner at or below the threshold (falling back to
// the large one exactly at it), large planner above.
PlanResult plan_witness(long long m, long long n, int k);

// Degree-k vertex count the plan's build will produce.
long long planned_vk(const ConstructionPlan& plan);

// Plans, builds and post-verifies a minimally k-connected graph with
// exactly n vertices, m edges and the minimum possible number of degree-k
// vertices. Throws InfeasibleError (with nearby feasible m values) when no
// plan exists and VerificationError if a built graph fails its checks.
Witness construct_witness(long long m, long long n, int k);

// Up to `want` feasible edge counts nearest to m, scanning outward and
// preferring the smaller distance; ties ordered below before above.
std::vector<long long> nearest_feasible_m(long long m, long long n, int k,
                                          int want = 2);

}  // namespace minconn
