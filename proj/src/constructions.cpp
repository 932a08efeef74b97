#include "minconn/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "minconn/bounds.hpp"
#include "minconn/connectivity.hpp"
#include "minconn/errors.hpp"
#include "minconn/structure.hpp"

namespace minconn {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw VerificationError(what);
}

}  // namespace

TreeScaffold path_scaffold(long long l) {
  if (l < 1) throw std::invalid_argument("path_scaffold: l must be >= 1");
  Graph tree(static_cast<int>(l));
  for (int v = 0; v + 1 < l; ++v) tree.add_edge(v, v + 1);
  return {TreeScaffold::Kind::path, std::move(tree)};
}

TreeScaffold star_scaffold(long long l) {
  if (l < 1) throw std::invalid_argument("star_scaffold: l must be >= 1");
  Graph tree(static_cast<int>(l));
  for (int v = 1; v < l; ++v) tree.add_edge(0, v);
  return {TreeScaffold::Kind::star, std::move(tree)};
}

TreeScaffold custom_scaffold(const Graph& tree) {
  return {TreeScaffold::Kind::custom, tree};
}

std::pair<Graph, ScaffoldLayout> build_base(const TreeScaffold& scaffold,
                                            int k) {
  if (k < 2) throw std::invalid_argument("build_base: k must be >= 2");
  const Graph& tree = scaffold.tree;
  if (!is_tree(tree)) {
    throw std::invalid_argument("build_base: scaffold must be a tree");
  }
  if (tree.max_degree() > k + 1) {
    throw std::invalid_argument(
        "build_base: tree degree " + std::to_string(tree.max_degree()) +
        " exceeds k + 1 = " + std::to_string(k + 1));
  }
  const int l = tree.n();
  ScaffoldLayout layout;
  layout.k = k;
  layout.l = l;
  layout.rows.assign(l, std::vector<int>(k));
  layout.added.assign(l, {});

  Graph g(k * l);
  layout.layer_of.assign(k * l, 0);
  for (int c = 0; c < k; ++c) {
    for (int v = 0; v < l; ++v) {
      layout.rows[v][c] = c * l + v;
      layout.layer_of[c * l + v] = v;
    }
    for (const auto& [u, v] : tree.edges()) {
      g.add_edge(c * l + u, c * l + v);
    }
  }
  for (int v = 0; v < l; ++v) {
    int fillers = k + 1 - tree.degree(v);
    for (int a = 0; a < fillers; ++a) {
      int id = g.add_vertex();
      layout.added[v].push_back(id);
      layout.layer_of.push_back(v);
      for (int c = 0; c < k; ++c) g.add_edge(id, layout.rows[v][c]);
    }
  }
  return {std::move(g), std::move(layout)};
}

void delete_x_matching(Graph& g, const ScaffoldLayout& layout, PathEnd end,
                       long long x) {
  if (x == 0) return;
  const int k = layout.k;
  if (2 * x > k) {
    throw std::invalid_argument("delete_x_matching: need 2 x <= k");
  }
  const long long v_end = end == PathEnd::t ? layout.l - 1 : 0;
  const auto& row = layout.rows[v_end];
  const auto& fillers = layout.added[v_end];
  for (long long z = 1; z <= x; ++z) {
    int white_keep = row[2 * z - 2];
    int white_move = row[2 * z - 1];
    int black = fillers[z - 1];
    // The one neighbor of white_move living outside its own layer: the next
    // copy vertex along the path, or (two-layer scaffolds after the other
    // end was rerouted) the filler that inherited that slot.
    int cross = -1;
    for (int w : g.neighbors(white_move)) {
      if (layout.layer_of[w] != v_end) {
        require(cross == -1,
                "delete_x_matching: outgoing edge of copy vertex " +
                    std::to_string(white_move) + " is not unique");
        cross = w;
      }
    }
    require(cross != -1, "delete_x_matching: copy vertex " +
                             std::to_string(white_move) +
                             " has no outgoing edge");
    g.delete_edge(white_move, cross);
    g.add_edge(black, cross);
    g.delete_edge(white_keep, black);
  }
}

Graph build_small_m(const ConstructionPlan& plan) {
  if (plan.regime != Regime::small_m) {
    throw std::invalid_argument("build_small_m: plan is for the large regime");
  }
  if (plan.l == 1 && plan.i > 0) return build_small_m_l1(plan);
  auto [g, layout] = build_base(path_scaffold(plan.l), plan.k);
  delete_x_matching(g, layout, PathEnd::t, plan.i_t);
  delete_x_matching(g, layout, PathEnd::s, plan.i_s);
  // Layer order for filler deletions: inner layers along the path, then the
  // s end, then the t end. The plan guarantees a deleted end layer carries
  // no rerouted units, so every victim still has its full degree k.
  std::vector<long long> order;
  for (long long v = 1; v + 1 < plan.l; ++v) order.push_back(v);
  order.push_back(0);
  if (plan.l > 1) order.push_back(plan.l - 1);
  require(plan.j <= static_cast<long long>(order.size()),
          "build_small_m: more deletions than layers");
  std::vector<int> victims;
  for (long long d = 0; d < plan.j; ++d) {
    victims.push_back(layout.added[order[d]][0]);
  }
  std::sort(victims.rbegin(), victims.rend());
  for (int victim : victims) {
    require(g.degree(victim) == plan.k,
            "build_small_m: deletion victim lost its degree");
    g.delete_vertex(victim);
  }
  return std::move(g);
}

Graph build_small_m_l1(const ConstructionPlan& plan) {
  const int k = plan.k;
  if (plan.l != 1 || plan.i < 1 || 2 * plan.i > k || plan.j != 0) {
    throw std::invalid_argument(
        "build_small_m_l1: needs l == 1, j == 0 and 1 <= i <= floor(k / 2)");
  }
  auto [g, layout] = build_base(path_scaffold(1), k);
  const auto& row = layout.rows[0];      // k copy vertices, degree k + 1
  const auto& fillers = layout.added[0];  // k + 1 fillers, degree k
  // Unit z trades two row-filler edges for one filler-filler edge; the two
  // row vertices drop to degree k, both fillers stay at degree k.
  for (long long z = 1; z <= plan.i; ++z) {
    g.delete_edge(row[2 * z - 2], fillers[2 * z - 2]);
    g.delete_edge(row[2 * z - 1], fillers[2 * z - 1]);
    g.add_edge(fillers[2 * z - 2], fillers[2 * z - 1]);
  }
  return std::move(g);
}

Graph build_large_m(const ConstructionPlan& plan) {
  if (plan.regime != Regime::large_m) {
    throw std::invalid_argument("build_large_m: plan is for the small regime");
  }
  auto [g, layout] = build_base(path_scaffold(plan.l), plan.k);
  for (long long a = 0; a < plan.j; ++a) {
    int id = g.add_vertex();
    for (int c = 0; c < plan.k; ++c) {
      g.add_edge(id, layout.rows[a % plan.l][c]);
    }
  }
  // Contract the leaf edge at the s end of copies i - 1 .. 0. Descending
  // copy order keeps the not-yet-contracted ids stable. The two endpoints
  // never share a neighbor, so each contraction drops exactly one edge and
  // leaves a vertex of degree 2k.
  for (long long c = plan.i - 1; c >= 0; --c) {
    int s_c = static_cast<int>(c * plan.l);
    int u_c = static_cast<int>(c * plan.l + 1);
    long long before = g.m();
    g.contract_edge(u_c, s_c);
    require(g.m() == before - 1,
            "build_large_m: contraction merged parallel edges");
  }
  return std::move(g);
}

PlanResult plan_witness(long long m, long long n, int k) {
  if (k < 2) throw std::invalid_argument("plan_witness: k must be >= 2");
  if (n <= k) return {std::nullopt, "n must exceed k"};
  Rational m0 = threshold(n, k);
  if (Rational(m) <= m0) {
    PlanResult small = try_plan_small_m(m, n, k);
    if (small.plan) return small;
    if (Rational(m) == m0) {
      PlanResult large = try_plan_large_m(m, n, k);
      if (large.plan) return large;
    }
    return small;
  }
  return try_plan_large_m(m, n, k);
}

long long planned_vk(const ConstructionPlan& plan) {
  const long long k = plan.k;
  if (plan.regime == Regime::small_m) {
    return plan.l * (k - 1) + 2 + 2 * plan.i + plan.j * (k - 1);
  }
  return plan.l * (k - 1) + 2 + plan.j;
}

Witness construct_witness(long long m, long long n, int k) {
  if (k < 2) throw std::invalid_argument("construct_witness: k must be >= 2");
  PlanResult planned = plan_witness(m, n, k);
  if (!planned.plan) {
    throw InfeasibleError(
        "no witness with m = " + std::to_string(m) + ", n = " +
            std::to_string(n) + ", k = " + std::to_string(k) + ": " +
            planned.reason,
        nearest_feasible_m(m, n, k));
  }
  const ConstructionPlan& plan = *planned.plan;
  Witness w;
  w.plan = plan;
  w.graph = plan.regime == Regime::small_m ? build_small_m(plan)
                                           : build_large_m(plan);
  w.expected_vk = planned_vk(plan);

  const Graph& g = w.graph;
  require(g.n() == n && g.m() == m,
          "construct_witness: built (n, m) = (" + std::to_string(g.n()) +
              ", " + std::to_string(g.m()) + "), wanted (" +
              std::to_string(n) + ", " + std::to_string(m) + ")");
  StructureReport sr = structure_report(g, k);
  require(sr.vk == w.expected_vk,
          "construct_witness: built graph has " + std::to_string(sr.vk) +
              " degree-k vertices, planned " + std::to_string(w.expected_vk));
  require(w.expected_vk == tight_lower(m, n, k),
          "construct_witness: planned count misses the lower bound");
  require(is_minimally_k_connected(g, k).is_minimal,
          "construct_witness: built graph is not minimally k-connected");
  w.verified = true;
  return w;
}

std::vector<long long> nearest_feasible_m(long long m, long long n, int k,
                                          int want) {
  std::vector<long long> out;
  if (k < 2 || n <= 2 * k || want <= 0) return out;
  auto [lo, hi] = edge_range(n, k);
  auto constructible = [&](long long c) {
    return try_plan_small_m(c, n, k).plan.has_value() ||
           try_plan_large_m(c, n, k).plan.has_value();
  };
  for (long long d = 1; static_cast<int>(out.size()) < want; ++d) {
    long long below = m - d;
    long long above = m + d;
    if (below < lo && above > hi) break;
    if (below >= lo && below <= hi && constructible(below)) {
      out.push_back(below);
    }
    if (static_cast<int>(out.size()) >= want) break;
    if (above >= lo && above <= hi && constructible(above)) {
      out.push_back(above);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minconn
