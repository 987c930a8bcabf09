#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/families.hpp"
#include "core/graph6.hpp"

using namespace qlap;

namespace {
Graph random_graph(int n, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rng() & 1) b.add_edge(i, j);
  return std::move(b).build();
}
}  // namespace

TEST_CASE("hand-decoded records") {
  // 'C' encodes n=4; '~' is 63 = 111111, all six upper-triangle bits set.
  Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4 == make_complete(4));
  CHECK(write_graph6(make_complete(4)) == "C~");

  CHECK(parse_graph6("?").order() == 0);
  CHECK(write_graph6(Graph::empty(0)) == "?");

  // n=5 with edges 02, 04, 13, 34 (the reference example): bytes 68 81 99.
  Graph ex = parse_graph6("DQc");
  CHECK(ex.order() == 5);
  CHECK(ex.edge_count() == 4);
  CHECK(ex.has_edge(0, 2));
  CHECK(ex.has_edge(0, 4));
  CHECK(ex.has_edge(1, 3));
  CHECK(ex.has_edge(3, 4));
  CHECK(write_graph6(ex) == "DQc");
}

TEST_CASE("malformed records") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  // 'D' needs two payload bytes.
  CHECK_THROWS_AS(parse_graph6("D?"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("D???"), Graph6Error);  // trailing garbage
  CHECK_THROWS_AS(parse_graph6("D?\x1f"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("A@"), Graph6Error);  // nonzero padding bit
  CHECK_THROWS_AS(parse_graph6("~~??????"), Graph6Error);  // 8-byte size form

  try {
    parse_graph6("D?");
  } catch (const Graph6Error& e) {
    CHECK(e.offset == 2);
  }
  // "D??" itself is fine: the empty graph on 5 vertices.
  CHECK(parse_graph6("D??").edge_count() == 0);
}

TEST_CASE("four-byte size form") {
  Graph g = Graph::empty(63);
  std::string enc = write_graph6(g);
  REQUIRE(enc.size() == 4 + (63 * 62 / 2 + 5) / 6);
  CHECK(enc[0] == '~');
  CHECK(parse_graph6(enc) == g);

  std::mt19937_64 rng(17);
  Graph big = random_graph(70, rng);
  CHECK(parse_graph6(write_graph6(big)) == big);
  // The short size form must still be used below 63.
  CHECK(write_graph6(Graph::empty(62))[0] == 62 + 63);
  CHECK_THROWS_AS(parse_graph6("~??a"), Graph6Error);  // 4-byte form with n < 63
}

TEST_CASE("file header is accepted") {
  CHECK(parse_graph6(">>graph6<<C~") == make_complete(4));
}

TEST_CASE("round-trip on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = int(rng() % 13);
    Graph g = random_graph(n, rng);
    Graph back = parse_graph6(write_graph6(g));
    CHECK(back == g);
  }
  // Boundary orders.
  for (int n : {0, 1, 2, 62, 63, 64}) {
    Graph g = random_graph(n, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}
