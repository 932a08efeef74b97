#include "minconn/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace minconn {

namespace {

// Unit-capacity max-flow network over the vertex-split digraph:
// in(v) = 2v, out(v) = 2v + 1, the arc in(v) -> out(v) carries the capacity
// of vertex v itself (1 for interior vertices, unbounded for the terminals),
// and every undirected edge {a, b} contributes out(a) -> in(b) and
// out(b) -> in(a). Edge arcs are uncuttable (the vertex caps already bound
// the flow) so every min cut consists of vertex arcs only and the residual
// reachability split recovers it.
class SplitFlow {
public:
  SplitFlow(const Graph& g, int s, int t)
      : node_count_(2 * g.n()), head_(node_count_, -1) {
    const int big = std::numeric_limits<int>::max() / 2;
    for (int v = 0; v < g.n(); ++v) {
      add_arc(in(v), out(v), v == s || v == t ? big : 1);
    }
    for (const auto& [a, b] : g.edges()) {
      add_arc(out(a), in(b), big);
      add_arc(out(b), in(a), big);
    }
    source_ = out(s);
    sink_ = in(t);
  }

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  // Augments one unit at a time (all arcs have capacity 1 except the terminal
  // splits, and each augmenting path carries exactly 1). Stops early once
  // `limit` units are placed; a return value below `limit` is the exact
  // max-flow and leaves the residual graph ready for cut extraction.
  int max_flow_at_most(int limit) {
    int flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  // Min vertex cut from the final residual graph: v is in the cut when in(v)
  // stays reachable from the source but out(v) does not.
  VertexSet extract_cut(int s, int t) {
    std::vector<char> seen(node_count_, 0);
    std::queue<int> bfs;
    bfs.push(source_);
    seen[source_] = 1;
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      for (int e = head_[x]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
          seen[arcs_[e].to] = 1;
          bfs.push(arcs_[e].to);
        }
      }
    }
    VertexSet cut;
    for (int v = 0; v < node_count_ / 2; ++v) {
      if (v != s && v != t && seen[in(v)] && !seen[out(v)]) cut.push_back(v);
    }
    return cut;
  }

private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  bool augment() {
    std::vector<int> via(node_count_, -1);
    std::queue<int> bfs;
    bfs.push(source_);
    via[source_] = -2;
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      if (x == sink_) break;
      for (int e = head_[x]; e != -1; e = arcs_[e].next) {
        if (arcs_[e].cap > 0 && via[arcs_[e].to] == -1) {
          via[arcs_[e].to] = e;
          bfs.push(arcs_[e].to);
        }
      }
    }
    if (via[sink_] == -1) return false;
    for (int x = sink_; x != source_;) {
      int e = via[x];
      --arcs_[e].cap;
      ++arcs_[e ^ 1].cap;
      x = arcs_[e ^ 1].to;
    }
    return true;
  }

  int node_count_;
  int source_ = 0;
  int sink_ = 0;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

void check_pair(const Graph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw std::invalid_argument("local connectivity: vertex out of range");
  }
  if (s == t) {
    throw std::invalid_argument("local connectivity: s == t");
  }
  if (g.has_edge(s, t)) {
    throw std::invalid_argument(
        "local connectivity: undefined for adjacent vertices " +
        std::to_string(s) + ", " + std::to_string(t));
  }
}

int local_flow(const Graph& g, int s, int t, int limit) {
  SplitFlow net(g, s, t);
  return net.max_flow_at_most(limit);
}

}  // namespace

int local_vertex_connectivity(const Graph& g, int s, int t) {
  check_pair(g, s, t);
  return local_flow(g, s, t, g.n());
}

std::pair<int, VertexSet> local_vertex_connectivity_with_cut(const Graph& g,
                                                             int s, int t) {
  check_pair(g, s, t);
  SplitFlow net(g, s, t);
  int kappa = net.max_flow_at_most(g.n());
  return {kappa, net.extract_cut(s, t)};
}

ConnectivityCertificate vertex_connectivity(const Graph& g) {
  if (g.n() == 0) return {0, std::nullopt};
  if (is_complete(g)) return {g.n() - 1, std::nullopt};
  auto [comp_count, labels] = components(g);
  if (comp_count > 1) return {0, VertexSet{}};
  // Some minimum separator avoids at least one pair of non-adjacent vertices,
  // so the minimum over all non-adjacent pairs is exact. The flow limit
  // best + 1 makes every run that ties or improves the current best an exact
  // max-flow, which keeps its residual cut valid.
  int best = g.n();
  VertexSet best_cut;
  for (int s = 0; s < g.n(); ++s) {
    for (int t = s + 1; t < g.n(); ++t) {
      if (g.has_edge(s, t)) continue;
      SplitFlow net(g, s, t);
      int flow = net.max_flow_at_most(best + 1);
      if (flow > best) continue;
      VertexSet cut = net.extract_cut(s, t);
      if (flow < best || cut < best_cut) {
        best = flow;
        best_cut = std::move(cut);
      }
    }
  }
  return {best, best_cut};
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("is_k_connected: negative k");
  if (k == 0) return true;
  if (g.n() <= k) return false;
  if (g.min_degree() < k) return false;
  if (is_complete(g)) return true;
  for (int s = 0; s < g.n(); ++s) {
    for (int t = s + 1; t < g.n(); ++t) {
      if (g.has_edge(s, t)) continue;
      if (local_flow(g, s, t, k) < k) return false;
    }
  }
  return true;
}

MinimalityReport is_minimally_k_connected(const Graph& g, int k,
                                          bool want_separators) {
  if (k < 1) {
    throw std::invalid_argument("is_minimally_k_connected: k must be >= 1");
  }
  MinimalityReport report;
  report.is_k_connected = is_k_connected(g, k);
  if (!report.is_k_connected) return report;

  // G - {u, v} stays k-connected iff u and v still have k disjoint paths:
  // any other pair keeps its paths because a separator of G - e smaller than
  // k would have to split u from v (else it would separate G itself).
  std::map<Edge, VertexSet> separators;
  Graph work = g;
  for (const auto& e : g.edges()) {
    auto [u, v] = e;
    work.delete_edge(u, v);
    if (want_separators) {
      auto [kappa, cut] = local_vertex_connectivity_with_cut(work, u, v);
      if (kappa >= k) {
        report.violating_edge = e;
        return report;
      }
      separators.emplace(e, std::move(cut));
    } else if (local_flow(work, u, v, k) >= k) {
      report.violating_edge = e;
      return report;
    }
    work.add_edge(u, v);
  }
  report.is_minimal = true;
  if (want_separators) report.per_edge_separator = std::move(separators);
  return report;
}

}  // namespace minconn
