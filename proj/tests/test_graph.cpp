#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "core/families.hpp"
#include "core/graph.hpp"

using namespace qlap;

namespace {

Graph random_graph(int n, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() & 1) b.add_edge(i, j);
  return std::move(b).build();
}

// Brute-force bipartiteness: try all 2^n colourings.
bool bipartite_brute(const Graph& g) {
  const int n = g.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.has_edge(u, v) && (((mask >> u) ^ (mask >> v)) & 1) == 0) ok = false;
    if (ok) return true;
  }
  return n == 0;
}

}  // namespace

TEST_CASE("complement of families") {
  CHECK(make_complete(4).complement() == Graph::empty(4));
  // Star(4) complement: the three leaves become a triangle, the centre isolates.
  Graph sc = make_star(4).complement();
  CHECK(sc.degree(0) == 0);
  CHECK(sc.has_edge(1, 2));
  CHECK(sc.has_edge(1, 3));
  CHECK(sc.has_edge(2, 3));
  CHECK(sc.edge_count() == 3);
}

TEST_CASE("complement is an involution and splits the edge count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + int(rng() % 12);
    Graph g = random_graph(n, rng);
    CHECK(g.complement().complement() == g);
    CHECK(g.edge_count() + g.complement().edge_count() == 1ll * n * (n - 1) / 2);
  }
}

TEST_CASE("bipartition of complete bipartite and stars") {
  auto b = bipartition(make_complete_bipartite(2, 3));
  REQUIRE(b.has_value());
  CHECK(b->k() == 2);
  CHECK(b->t() == 2);
  CHECK(b->ell() == 3);

  auto s = bipartition(make_star(5));
  REQUIRE(s.has_value());
  CHECK(s->x == std::vector<int>{0});
  CHECK(s->t() == 1);
  CHECK(s->ell() == 4);

  CHECK_FALSE(bipartition(make_complete(3)).has_value());
}

TEST_CASE("bipartition conventions: ties and isolated vertices") {
  // Balanced component: the side holding vertex 0 becomes X.
  Graph p4 = make_path(4);
  auto b = bipartition(p4);
  REQUIRE(b.has_value());
  CHECK(b->x == std::vector<int>{0, 2});
  CHECK(b->y == std::vector<int>{1, 3});

  // Isolated vertices land in Y.
  auto e = bipartition(Graph::empty(3));
  REQUIRE(e.has_value());
  CHECK(e->x.empty());
  CHECK(e->y.size() == 3);
  CHECK(e->ell() == 3);  // every Y vertex has degree 0 = |X|
}

TEST_CASE("bipartition against brute-force 2-colouring") {
  for (int n = 0; n <= 5; ++n) {
    long long total = labelled_graph_count(n);
    for (long long m = 0; m < total; ++m) {
      Graph g = graph_from_mask(n, m);
      CHECK(bipartition(g).has_value() == bipartite_brute(g));
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + int(rng() % 8);
    Graph g = random_graph(n, rng);
    auto b = bipartition(g);
    CHECK(b.has_value() == bipartite_brute(g));
    if (b) {
      CHECK(b->y.size() >= b->x.size());
      for (int v : b->x)
        g.for_each_neighbor(v, [&](int u) {
          CHECK(std::find(b->x.begin(), b->x.end(), u) == b->x.end());
        });
    }
  }
}

TEST_CASE("degree stats") {
  DegreeStats k4 = degree_stats(make_complete(4));
  CHECK(k4.max_degree == 3);
  CHECK(k4.min_degree == 3);
  CHECK(k4.edges == 6);
  for (int v = 0; v < 4; ++v) CHECK(*k4.avg_neighbor_degree[v] == Rat64(3));

  DegreeStats st = degree_stats(make_star(4));
  CHECK(st.max_degree == 3);
  CHECK(st.min_degree == 1);
  CHECK(*st.avg_neighbor_degree[0] == Rat64(1));
  CHECK(*st.avg_neighbor_degree[1] == Rat64(3));

  DegreeStats c5 = degree_stats(make_cycle(5));
  for (int v = 0; v < 5; ++v)
    CHECK(Rat64(c5.degree[v]) + *c5.avg_neighbor_degree[v] == Rat64(4));

  DegreeStats iso = degree_stats(Graph::empty(2));
  CHECK_FALSE(iso.avg_neighbor_degree[0].has_value());

  // Degree sum identity on random graphs.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(2 + int(rng() % 10), rng);
    DegreeStats s = degree_stats(g);
    long long sum = 0;
    for (int d : s.degree) sum += d;
    CHECK(sum == 2 * s.edges);
  }
}

TEST_CASE("family constructors") {
  // K-bar_5 join K_1 is the star on 6 vertices.
  Graph h6 = make_hn(6);
  CHECK(hn_clique_size(6) == 1);
  std::multiset<int> degs;
  for (int v = 0; v < 6; ++v) degs.insert(h6.degree(v));
  CHECK(degs == std::multiset<int>{1, 1, 1, 1, 1, 5});

  CHECK(hn_clique_size(9) == 2);
  CHECK(hn_clique_size(3) == 1);
  CHECK_THROWS_AS(hn_clique_size(2), std::invalid_argument);

  // Degrees in the four-block construction.
  for (auto [n, k, t, l] : {std::array<int, 4>{8, 3, 1, 2}, {10, 4, 2, 3}, {12, 6, 5, 1}}) {
    Graph h = make_thm_bip_h(n, k, t, l);
    for (int v = 0; v < t; ++v) CHECK(h.degree(v) == n - k);
    for (int v = t; v < k; ++v) CHECK(h.degree(v) == l);
    for (int v = k; v < k + l; ++v) CHECK(h.degree(v) == k);
    for (int v = k + l; v < n; ++v) CHECK(h.degree(v) == t);
    CHECK(h.edge_count() == 1ll * t * (n - k) + 1ll * (k - t) * l);
  }
  CHECK_THROWS_AS(make_thm_bip_h(8, 5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_thm_bip_h(8, 3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_thm_bip_h(8, 3, 1, 6), std::invalid_argument);

  // Edge count of the four-block graph, exhaustively over small tuples.
  for (int n = 4; n <= 14; ++n)
    for (int k = 2; 2 * k <= n; ++k)
      for (int t = 1; t <= k; ++t)
        for (int l = 1; l <= n - k; ++l)
          CHECK(make_thm_bip_h(n, k, t, l).edge_count() == 1ll * t * (n - k) + 1ll * (k - t) * l);
}

TEST_CASE("family spec parser") {
  Graph paw = construct_family("join(empty:1,union(complete:2,complete:1))");
  CHECK(paw.order() == 4);
  CHECK(paw.degree(0) == 3);
  CHECK(paw.edge_count() == 4);

  CHECK(construct_family("star:6") == make_star(6));
  CHECK(construct_family("bipartite:2,3") == make_complete_bipartite(2, 3));
  CHECK(construct_family("thmbiph:8,3,1,2") == make_thm_bip_h(8, 3, 1, 2));
  CHECK_THROWS_AS(construct_family("star"), std::invalid_argument);
  CHECK_THROWS_AS(construct_family("star:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(construct_family("frob:3"), std::invalid_argument);
  CHECK_THROWS_AS(construct_family("star:3 x"), std::invalid_argument);

  auto range = expand_family_range("hn:6..9");
  REQUIRE(range.size() == 4);
  CHECK(range.front() == "hn:6");
  CHECK(range.back() == "hn:9");
  CHECK(expand_family_range("star:5") == std::vector<std::string>{"star:5"});
  CHECK_THROWS_AS(expand_family_range("thmbiph:8..9,3,1..2,2"), std::invalid_argument);
}

TEST_CASE("labelled enumeration") {
  CHECK(labelled_graph_count(3) == 8);
  CHECK(labelled_graph_count(4) == 64);
  CHECK(labelled_graph_count(0) == 1);
  CHECK_THROWS_AS(labelled_graph_count(9), std::invalid_argument);

  std::set<std::vector<uint64_t>> seen;
  int complete_count = 0;
  for (long long m = 0; m < labelled_graph_count(5); ++m) {
    Graph g = graph_from_mask(5, m);
    if (g == make_complete(5)) ++complete_count;
    std::vector<uint64_t> key;
    for (int v = 0; v < 5; ++v) key.push_back(g.row(v)[0]);
    seen.insert(key);
  }
  CHECK(seen.size() == 1024);
  CHECK(complete_count == 1);
}

TEST_CASE("edge removal") {
  Graph k3 = make_complete(3);
  Graph p3 = k3.without_edge(0, 1);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.degree(2) == 2);
  CHECK(p3.with_edge(0, 1) == k3);
  CHECK_THROWS_AS(p3.without_edge(0, 1), std::invalid_argument);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + int(rng() % 10);
    Graph g = random_graph(n, rng);
    if (g.edge_count() == 0) continue;
    int u = -1, v = -1;
    do {
      u = int(rng() % n);
      v = int(rng() % n);
    } while (u == v || !g.has_edge(u, v));
    Graph h = g.without_edge(u, v);
    CHECK(h.edge_count() == g.edge_count() - 1);
    CHECK(h.with_edge(u, v) == g);
  }
}

TEST_CASE("component counting") {
  CHECK(Graph::empty(4).component_count() == 4);
  CHECK(make_complete(4).component_count() == 1);
  Graph two = make_disjoint_union(make_complete(3), make_path(2));
  CHECK(two.component_count() == 2);
  CHECK(two.connected() == false);
  // Removing the centre of a star disconnects it.
  CHECK(make_star(5).component_count_without(0) == 4);
}
