#include "minconn/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "minconn/bounds.hpp"
#include "minconn/errors.hpp"
#include "minconn/graph_io.hpp"
#include "minconn/structure.hpp"

namespace minconn {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask(1) << v;
    adj[v] |= Mask(1) << u;
  }
  return adj;
}

bool mask_connected(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return true;
  Mask seen = Mask(1) << std::countr_zero(alive);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= adj[std::countr_zero(f)];
    }
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == alive;
}

// Any r-subset of the n vertices whose removal disconnects the rest?
// Iterates r-subsets with Gosper's hack; removal never merges components,
// so checking exactly size r covers all sizes <= r as long as at least two
// vertices survive.
bool subset_disconnects(const std::vector<Mask>& adj, int n, int r) {
  if (n - r < 2) return false;
  Mask full = (Mask(1) << n) - 1;
  if (r == 0) return !mask_connected(adj, full);
  for (Mask s = (Mask(1) << r) - 1; s <= full;) {
    if (!mask_connected(adj, full & ~s)) return true;
    Mask c = s & (~s + 1);
    Mask grown = s + c;
    if (grown == 0) break;
    s = (((s ^ grown) >> 2) / c) | grown;
  }
  return false;
}

bool masks_k_connected(const std::vector<Mask>& adj, int n, int k) {
  if (k <= 0) return n > k;
  if (n <= k) return false;
  return !subset_disconnects(adj, n, k - 1);
}

void check_brute_input(const Graph& g) {
  if (g.n() > 62) {
    throw std::invalid_argument("brute force limited to n <= 62");
  }
}

// ---- exhaustive enumeration over edge subsets (n <= oracle_max_n) ----

struct EdgePos {
  int u, v;
};

std::vector<EdgePos> positions(int n) {
  std::vector<EdgePos> pos;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pos.push_back({u, v});
  }
  return pos;
}

Graph graph_from_masks(const std::vector<Mask>& adj, int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (Mask f = adj[u] >> (u + 1); f != 0; f &= f - 1) {
      g.add_edge(u, u + 1 + std::countr_zero(f));
    }
  }
  return g;
}

// Depth-first over include/exclude decisions for each vertex pair in
// lexicographic order. Prunes: not enough positions left, degree deficit
// exceeding what the remaining edges can fix, and a finalized vertex (all
// its pairs decided) below degree k. Sink receives adjacency masks of each
// minimally k-connected graph.
template <typename Sink>
class Search {
public:
  Search(int n, int k, long long target, Sink& sink)
      : n_(n), k_(k), target_(target), pos_(positions(n)), adj_(n, 0),
        deg_(n, 0), sink_(sink) {}

  // Runs the whole space.
  void run() { rec(0, 0); }

  // Runs the partition where (0, first) is the smallest chosen edge.
  void run_partition(int first) {
    adj_[0] = Mask(1) << first;
    adj_[first] = Mask(1) << 0;
    deg_[0] = deg_[first] = 1;
    rec(first, 1);
  }

private:
  bool finalized_degrees_ok(int upto) const {
    for (int v = 0; v < upto; ++v) {
      if (deg_[v] < k_) return false;
    }
    return true;
  }

  void finish() {
    if (!finalized_degrees_ok(n_)) return;
    if (!masks_k_connected(adj_, n_, k_)) return;
    for (const auto& [u, v] : pos_) {
      if ((adj_[u] >> v & 1) == 0) continue;
      adj_[u] ^= Mask(1) << v;
      adj_[v] ^= Mask(1) << u;
      bool still = masks_k_connected(adj_, n_, k_);
      adj_[u] ^= Mask(1) << v;
      adj_[v] ^= Mask(1) << u;
      if (still) return;  // this edge is removable: not minimal
    }
    sink_(adj_, deg_);
  }

  void rec(int idx, long long have) {
    if (have == target_) {
      finish();
      return;
    }
    if (idx >= static_cast<int>(pos_.size())) return;
    if (have + (static_cast<long long>(pos_.size()) - idx) < target_) return;
    long long deficit = 0;
    for (int v = 0; v < n_; ++v) deficit += std::max(0, k_ - deg_[v]);
    if (deficit > 2 * (target_ - have)) return;
    const auto [u, v] = pos_[idx];
    if (v == u + 1 && u >= 1 && deg_[u - 1] < k_) return;  // u-1 finalized

    adj_[u] |= Mask(1) << v;
    adj_[v] |= Mask(1) << u;
    ++deg_[u];
    ++deg_[v];
    rec(idx + 1, have + 1);
    adj_[u] ^= Mask(1) << v;
    adj_[v] ^= Mask(1) << u;
    --deg_[u];
    --deg_[v];

    rec(idx + 1, have);
  }

  int n_, k_;
  long long target_;
  std::vector<EdgePos> pos_;
  std::vector<Mask> adj_;
  std::vector<int> deg_;
  Sink& sink_;
};

void check_envelope(int n) {
  if (n < 0 || n > oracle_max_n) {
    throw InfeasibleError("enumeration envelope is 0 <= n <= " +
                          std::to_string(oracle_max_n) + ", got n = " +
                          std::to_string(n));
  }
}

int worker_count(std::size_t tasks) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("MINCONN_THREADS")) {
    long parsed = std::strtol(env, nullptr, 10);
    if (parsed >= 1) hw = static_cast<unsigned>(parsed);
  }
  return static_cast<int>(std::min<std::size_t>(hw, std::max<std::size_t>(
                                                        tasks, 1)));
}

// Partitioned parallel sweep: one task per (edge count, smallest chosen
// edge (0, first)). Results land in a task-indexed vector, so any merge
// that walks it sequentially is independent of scheduling.
template <typename MakeSink>
void run_partitioned(int n, int k, long long m_lo, long long m_hi,
                     MakeSink&& make_sink) {
  struct Task {
    long long m;
    int first;
  };
  std::vector<Task> tasks;
  for (long long m = m_lo; m <= m_hi; ++m) {
    for (int first = 1; first < n; ++first) tasks.push_back({m, first});
  }
  if (tasks.empty()) return;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t id = next.fetch_add(1);
      if (id >= tasks.size()) return;
      auto sink = make_sink(static_cast<std::size_t>(id), tasks[id].m);
      Search<decltype(sink)> search(n, k, tasks[id].m, sink);
      search.run_partition(tasks[id].first);
    }
  };
  int workers = worker_count(tasks.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

long long enumerate_min_k_connected(
    int n, int k, const std::function<void(const Graph&)>& on_found) {
  check_envelope(n);
  if (k < 1) throw std::invalid_argument("enumeration requires k >= 1");
  if (n <= k) return 0;
  long long found = 0;
  auto sink = [&](const std::vector<Mask>& adj, const std::vector<int>&) {
    ++found;
    if (on_found) on_found(graph_from_masks(adj, n));
  };
  auto [lo, hi] = edge_range(n, k);
  for (long long m = lo; m <= hi; ++m) {
    Search<decltype(sink)> search(n, k, m, sink);
    search.run();
  }
  return found;
}

TightnessTable min_vk_table(int n, int k) {
  check_envelope(n);
  if (k < 1) throw std::invalid_argument("min_vk_table requires k >= 1");
  TightnessTable table;
  table.n = n;
  table.k = k;
  if (n <= k) return table;

  struct Partial {
    long long min_vk = -1;
    std::string g6;
    long long count = 0;
  };
  auto [lo, hi] = edge_range(n, k);
  std::vector<Partial> partials(static_cast<std::size_t>(hi - lo + 1) *
                                std::max(n - 1, 1));
  run_partitioned(n, k, lo, hi, [&](std::size_t task_id, long long) {
    Partial* out = &partials[task_id];
    return [out, n, k](const std::vector<Mask>& adj,
                       const std::vector<int>& deg) {
      ++out->count;
      long long vk = 0;
      for (int v = 0; v < n; ++v) vk += deg[v] == k ? 1 : 0;
      if (out->min_vk != -1 && vk > out->min_vk) return;
      std::string g6 = to_graph6(graph_from_masks(adj, n));
      if (out->min_vk == -1 || vk < out->min_vk || g6 < out->g6) {
        out->min_vk = vk;
        out->g6 = std::move(g6);
      }
    };
  });
  for (std::size_t id = 0; id < partials.size(); ++id) {
    const Partial& p = partials[id];
    if (p.count == 0) continue;
    long long m = lo + static_cast<long long>(id) / (n - 1);
    table.total_graphs += p.count;
    auto it = table.rows.find(m);
    if (it == table.rows.end()) {
      OracleRow row;
      row.min_vk = p.min_vk;
      row.witness_graph6 = p.g6;
      row.graph_count = p.count;
      table.rows.emplace(m, std::move(row));
    } else {
      OracleRow& row = it->second;
      row.graph_count += p.count;
      if (p.min_vk < row.min_vk ||
          (p.min_vk == row.min_vk && p.g6 < row.witness_graph6)) {
        row.min_vk = p.min_vk;
        row.witness_graph6 = p.g6;
      }
    }
  }
  for (auto& [m, row] : table.rows) row.witness = from_graph6(row.witness_graph6);
  return table;
}

TightnessReport verify_tightness(int n, int k) {
  check_envelope(n);
  if (k < 2) throw std::invalid_argument("verify_tightness requires k >= 2");
  TightnessReport report;
  report.n = n;
  report.k = k;
  if (n <= k) {
    report.ok = true;
    return report;
  }
  report.table = min_vk_table(n, k);

  // Per-graph pass, same partitioning; violations merged in task order.
  auto [lo, hi] = edge_range(n, k);
  std::vector<std::vector<TightnessViolation>> found(
      static_cast<std::size_t>(hi - lo + 1) * std::max(n - 1, 1));
  run_partitioned(n, k, lo, hi, [&](std::size_t task_id, long long m) {
    std::vector<TightnessViolation>* out = &found[task_id];
    return [out, n, k, m, lo = lo, hi = hi](const std::vector<Mask>& adj,
                                            const std::vector<int>&) {
      Graph g = graph_from_masks(adj, n);
      StructureReport sr = structure_report(g, k);
      auto flag = [&](bool ok, const std::string& check) {
        if (!ok) out->push_back({to_graph6(g), check});
      };
      flag(sr.f_is_forest, "forest lemma fails");
      flag(sr.c_f + sr.ek >= k, "component-edge lemma fails");
      flag(oxley_identity_check(g, k).holds, "counting identity fails");
      flag(sr.vk >= mader_lower(n, k).ceil(), "below the classic bound");
      flag(sr.vk >= mader_generalized_lower(n, k, sr.c_f, sr.ek, sr.delta)
                        .ceil(),
           "below the generalized bound");
      flag(sr.vk >= oxley_lower(m, n, k), "below the edge-sensitive bound");
      flag(sr.vk >= simple_lower(m, n, k), "below the degree-count bound");
      flag(sr.vk >= tight_lower(m, n, k), "below the tight bound");
      flag(sr.vk >= sr.delta, "fewer degree-k vertices than max degree");
      flag(sr.vk >= k + 1, "fewer than k + 1 degree-k vertices");
      flag(m >= lo && m <= hi, "edge count out of range");
    };
  });
  for (const auto& task_violations : found) {
    for (const auto& v : task_violations) {
      report.per_graph_ok = false;
      report.violations.push_back(v);
    }
  }

  for (long long m = lo; m <= hi; ++m) {
    auto it = report.table.rows.find(m);
    if (it != report.table.rows.end() &&
        it->second.min_vk < tight_lower(m, n, k)) {
      report.bound_holds = false;
      report.violations.push_back(
          {it->second.witness_graph6,
           "oracle minimum undercuts the bound at m = " + std::to_string(m)});
    }
    ParityClass pc = classify_parity(m, n, k);
    if (pc.feasible && n > 2 * k) {
      bool attained = it != report.table.rows.end() &&
                      it->second.min_vk == tight_lower(m, n, k);
      if (!attained) {
        report.tight_attained = false;
        report.violations.push_back(
            {"", "bound not attained at feasible m = " + std::to_string(m)});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

int brute_force_vertex_connectivity(const Graph& g) {
  check_brute_input(g);
  if (g.n() == 0) return 0;
  if (is_complete(g)) return g.n() - 1;
  std::vector<Mask> adj = adjacency_masks(g);
  for (int r = 0; r <= g.n() - 2; ++r) {
    if (subset_disconnects(adj, g.n(), r)) return r;
  }
  return g.n() - 1;
}

bool brute_force_is_k_connected(const Graph& g, int k) {
  check_brute_input(g);
  if (k <= 0) return g.n() > k;
  if (g.n() <= k) return false;
  return masks_k_connected(adjacency_masks(g), g.n(), k);
}

bool brute_force_is_minimally_k_connected(const Graph& g, int k) {
  check_brute_input(g);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<Mask> adj = adjacency_masks(g);
  if (!masks_k_connected(adj, g.n(), k)) return false;
  for (const auto& [u, v] : g.edges()) {
    adj[u] ^= Mask(1) << v;
    adj[v] ^= Mask(1) << u;
    bool still = masks_k_connected(adj, g.n(), k);
    adj[u] ^= Mask(1) << v;
    adj[v] ^= Mask(1) << u;
    if (still) return false;
  }
  return true;
}

}  // namespace minconn
