#include "minconn/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace minconn {

namespace {

std::string edge_str(int u, int v) {
  return "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) {
    throw GraphError(GraphError::Kind::out_of_range,
                     "negative vertex count " + std::to_string(n));
  }
  n_ = n;
  adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (!has_vertex(v)) {
    throw GraphError(GraphError::Kind::out_of_range,
                     "vertex " + std::to_string(v) + " not in [0, " +
                         std::to_string(n_) + ")");
  }
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return n_++;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw GraphError(GraphError::Kind::loop,
                     "loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    throw GraphError(GraphError::Kind::duplicate_edge,
                     "edge " + edge_str(u, v) + " already present");
  }
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

void Graph::delete_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) {
    throw GraphError(GraphError::Kind::missing_edge,
                     "edge " + edge_str(u, v) + " not present");
  }
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --m_;
}

std::vector<int> Graph::delete_vertex(int v) {
  check_vertex(v);
  m_ -= static_cast<long long>(adj_[v].size());
  for (int w : adj_[v]) {
    auto& aw = adj_[w];
    aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
  }
  adj_.erase(adj_.begin() + v);
  for (auto& list : adj_) {
    for (int& w : list) {
      if (w > v) --w;
    }
  }
  --n_;
  std::vector<int> map(n_ + 1);
  for (int old = 0; old <= n_; ++old) {
    map[old] = old < v ? old : old == v ? -1 : old - 1;
  }
  return map;
}

std::vector<int> Graph::contract_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v)) {
    throw GraphError(GraphError::Kind::missing_edge,
                     "cannot contract absent edge " + edge_str(u, v));
  }
  for (int w : std::vector<int>(adj_[v])) {
    if (w != u && !has_edge(u, w)) add_edge(u, w);
  }
  return delete_vertex(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> deg(n_);
  for (int v = 0; v < n_; ++v) deg[v] = static_cast<int>(adj_[v].size());
  std::sort(deg.begin(), deg.end());
  return deg;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : static_cast<int>(adj_[0].size());
  for (const auto& list : adj_) best = std::min(best, (int)list.size());
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, (int)list.size());
  return best;
}

std::pair<int, std::vector<int>> components(const Graph& g) {
  std::vector<int> label(g.n(), -1);
  int count = 0;
  for (int start = 0; start < g.n(); ++start) {
    if (label[start] != -1) continue;
    std::queue<int> bfs;
    bfs.push(start);
    label[start] = count;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : g.neighbors(v)) {
        if (label[w] == -1) {
          label[w] = count;
          bfs.push(w);
        }
      }
    }
    ++count;
  }
  return {count, label};
}

bool is_forest(const Graph& g) {
  // A graph is acyclic iff m == n - c.
  return g.m() == g.n() - components(g).first;
}

bool is_tree(const Graph& g) {
  return g.n() >= 1 && components(g).first == 1 && g.m() == g.n() - 1;
}

bool is_complete(const Graph& g) {
  return g.m() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep,
                       std::vector<int>* old_to_new) {
  std::vector<int> map(g.n(), -1);
  int next = 0;
  VertexSet sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  for (int v : sorted) {
    if (v < 0 || v >= g.n()) {
      throw GraphError(GraphError::Kind::out_of_range,
                       "induced_subgraph: vertex " + std::to_string(v) +
                           " not in host graph");
    }
    if (map[v] != -1) {
      throw GraphError(GraphError::Kind::duplicate_edge,
                       "induced_subgraph: duplicate vertex " +
                           std::to_string(v) + " in keep set");
    }
    map[v] = next++;
  }
  Graph sub(next);
  for (int v : sorted) {
    for (int w : g.neighbors(v)) {
      if (v < w && map[w] != -1) sub.add_edge(map[v], map[w]);
    }
  }
  if (old_to_new != nullptr) *old_to_new = std::move(map);
  return sub;
}

}  // namespace minconn
