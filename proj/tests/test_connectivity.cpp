#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "minconn/connectivity.hpp"
#include "minconn/graph.hpp"
#include "minconn/oracle.hpp"

using namespace minconn;
using namespace minconn::fixtures;

namespace {

// A valid separator leaves a disconnected (or empty-but-split) remainder.
bool separates(const Graph& g, const VertexSet& cut) {
  std::vector<int> keep;
  for (int v = 0; v < g.n(); ++v) {
    if (std::find(cut.begin(), cut.end(), v) == cut.end()) keep.push_back(v);
  }
  Graph rest = induced_subgraph(g, keep);
  return rest.n() >= 2 && components(rest).first >= 2;
}

}  // namespace

TEST_SUITE("connectivity") {

TEST_CASE("fixture connectivities") {
  CHECK(vertex_connectivity(cycle(5)).kappa == 2);
  CHECK(vertex_connectivity(cycle(12)).kappa == 2);
  CHECK(vertex_connectivity(path_graph(6)).kappa == 1);
  CHECK(vertex_connectivity(complete(6)).kappa == 5);
  CHECK(vertex_connectivity(complete(1)).kappa == 0);
  CHECK(vertex_connectivity(complete_bipartite(3, 5)).kappa == 3);
  CHECK(vertex_connectivity(petersen()).kappa == 3);
  CHECK(vertex_connectivity(wheel(7)).kappa == 3);
  CHECK(vertex_connectivity(star(4)).kappa == 1);
  CHECK(vertex_connectivity(Graph(3)).kappa == 0);
}

TEST_CASE("complete graphs have no separator witness") {
  ConnectivityCertificate cert = vertex_connectivity(complete(4));
  CHECK(cert.kappa == 3);
  CHECK_FALSE(cert.witness_separator.has_value());
}

TEST_CASE("separator witnesses are valid and minimum-sized") {
  for (const Graph& g : {cycle(6), petersen(), complete_bipartite(2, 4),
                         wheel(8), path_graph(5)}) {
    ConnectivityCertificate cert = vertex_connectivity(g);
    REQUIRE(cert.witness_separator.has_value());
    CHECK(static_cast<int>(cert.witness_separator->size()) == cert.kappa);
    CHECK(separates(g, *cert.witness_separator));
  }
}

TEST_CASE("disconnected graph yields empty separator") {
  Graph g(4, {{0, 1}, {2, 3}});
  ConnectivityCertificate cert = vertex_connectivity(g);
  CHECK(cert.kappa == 0);
  REQUIRE(cert.witness_separator.has_value());
  CHECK(cert.witness_separator->empty());
}

TEST_CASE("separator choice is deterministic") {
  Graph g = complete_bipartite(2, 5);
  auto a = vertex_connectivity(g);
  auto b = vertex_connectivity(g);
  REQUIRE(a.witness_separator.has_value());
  CHECK(*a.witness_separator == *b.witness_separator);
  CHECK(*a.witness_separator == VertexSet{0, 1});
  // The small class is the unique minimum cut of K_{2,3} as well.
  auto c = vertex_connectivity(complete_bipartite(2, 3));
  CHECK(c.kappa == 2);
  CHECK(*c.witness_separator == VertexSet{0, 1});
}

TEST_CASE("local connectivity") {
  Graph pet = petersen();
  CHECK(local_vertex_connectivity(pet, 0, 7) == 3);
  CHECK(local_vertex_connectivity(complete_bipartite(3, 4), 0, 1) == 4);
  CHECK(local_vertex_connectivity(complete_bipartite(3, 3), 0, 1) == 3);
  CHECK(local_vertex_connectivity(cycle(5), 0, 2) == 2);
  CHECK(local_vertex_connectivity(path_graph(5), 0, 4) == 1);
  CHECK_THROWS_AS(local_vertex_connectivity(pet, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(local_vertex_connectivity(pet, 0, 1),
                  std::invalid_argument);  // adjacent
  CHECK_THROWS_AS(local_vertex_connectivity(pet, 0, 99),
                  std::invalid_argument);
  auto [kappa, cut] = local_vertex_connectivity_with_cut(pet, 0, 7);
  CHECK(kappa == 3);
  CHECK(cut.size() == 3);
  CHECK(separates(pet, cut));
}

TEST_CASE("is_k_connected thresholds") {
  Graph pet = petersen();
  for (int k = 0; k <= 3; ++k) CHECK(is_k_connected(pet, k));
  CHECK_FALSE(is_k_connected(pet, 4));
  CHECK(is_k_connected(cycle(5), 2));
  CHECK_FALSE(is_k_connected(cycle(5), 3));
  CHECK(is_k_connected(complete(5), 4));
  CHECK_FALSE(is_k_connected(complete(5), 5));  // n <= k
  CHECK(is_k_connected(Graph(0), 0));
  CHECK_FALSE(is_k_connected(Graph(2), 1));
  CHECK_THROWS_AS(is_k_connected(pet, -1), std::invalid_argument);
}

TEST_CASE("minimality fixtures") {
  MinimalityReport c5 = is_minimally_k_connected(cycle(5), 2);
  CHECK(c5.is_k_connected);
  CHECK(c5.is_minimal);
  CHECK_FALSE(c5.violating_edge.has_value());

  // K_4 is 2-connected but every edge is redundant at k = 2.
  MinimalityReport k4 = is_minimally_k_connected(complete(4), 2);
  CHECK(k4.is_k_connected);
  CHECK_FALSE(k4.is_minimal);
  REQUIRE(k4.violating_edge.has_value());
  CHECK(*k4.violating_edge == Edge{0, 1});

  // A chorded cycle: the scan must step past critical edges to the chord.
  Graph chorded = cycle(5);
  chorded.add_edge(0, 2);
  MinimalityReport ch = is_minimally_k_connected(chorded, 2);
  CHECK_FALSE(ch.is_minimal);
  REQUIRE(ch.violating_edge.has_value());
  CHECK(*ch.violating_edge == Edge{0, 2});

  // K_5 is minimally 4-connected: deleting any edge breaks the degree bound.
  CHECK(is_minimally_k_connected(complete(5), 4).is_minimal);
  CHECK(is_minimally_k_connected(petersen(), 3).is_minimal);
  CHECK(is_minimally_k_connected(wheel(7), 3).is_minimal);
  CHECK(is_minimally_k_connected(complete_bipartite(3, 4), 3).is_minimal);
  CHECK_FALSE(is_minimally_k_connected(path_graph(4), 2).is_k_connected);
}

TEST_CASE("per-edge separators are valid in the edge-deleted graph") {
  Graph g = complete_bipartite(3, 4);
  MinimalityReport rep = is_minimally_k_connected(g, 3, true);
  REQUIRE(rep.is_minimal);
  REQUIRE(rep.per_edge_separator.has_value());
  CHECK(rep.per_edge_separator->size() == static_cast<size_t>(g.m()));
  for (const auto& [e, cut] : *rep.per_edge_separator) {
    CHECK(static_cast<int>(cut.size()) == 2);  // size k-1
    Graph without = g;
    without.delete_edge(e.first, e.second);
    CHECK(separates(without, cut));
  }
}

TEST_CASE("random graphs agree with brute force") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    double p = 0.15 + 0.1 * static_cast<double>(rng() % 8);
    Graph g = random_graph(rng, n, p);
    ConnectivityCertificate cert = vertex_connectivity(g);
    CHECK(cert.kappa == brute_force_vertex_connectivity(g));
    if (cert.witness_separator.has_value() && g.n() >= 2) {
      CHECK(static_cast<int>(cert.witness_separator->size()) == cert.kappa);
      if (cert.kappa > 0 || components(g).first > 1) {
        CHECK(separates(g, *cert.witness_separator));
      }
    }
    if (cert.kappa >= 1) {
      MinimalityReport fast = is_minimally_k_connected(g, cert.kappa);
      CHECK(fast.is_minimal ==
            brute_force_is_minimally_k_connected(g, cert.kappa));
    }
  }
}

}  // TEST_SUITE
