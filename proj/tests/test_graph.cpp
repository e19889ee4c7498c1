#include <random>

#include "bcast/disjoint_set.hpp"
#include "bcast/errors.hpp"
#include "bcast/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bcast;
using namespace bcast::testing;

TEST_CASE("parse_graph reads the edge-list format") {
  Graph p4 = parse_graph("4\n0 1\n1 2\n2 3");
  CHECK(p4.n() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.adjacent(1, 2));
  CHECK(!p4.adjacent(0, 2));

  Graph k1 = parse_graph("1\n");
  CHECK(k1.n() == 1);
  CHECK(k1.edge_count() == 0);

  Graph commented = parse_graph("# a comment\n\n3   # vertices\n0 1\n\n  1 2  # trailing\n");
  CHECK(commented == path_graph(3));
}

TEST_CASE("parse_graph rejects malformed input") {
  CHECK_THROWS_AS(parse_graph("3\n0 0"), parse_error);
  CHECK_THROWS_AS(parse_graph("3\n0 3"), parse_error);
  CHECK_THROWS_AS(parse_graph("3\n-1 2"), parse_error);
  CHECK_THROWS_AS(parse_graph(""), parse_error);
  CHECK_THROWS_AS(parse_graph("# only a comment\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("3\n0 1 2"), parse_error);
  CHECK_THROWS_AS(parse_graph("3\n0 x"), parse_error);
  CHECK_THROWS_AS(parse_graph("0\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("3\n0 1\n1 0"), parse_error);
  Graph lenient = parse_graph("3\n0 1\n1 0\n1 2", false);
  CHECK(lenient.edge_count() == 2);
}

TEST_CASE("render and parse round-trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 30);
    Graph g = random_connected(n, rng, 0.15);
    CHECK(parse_graph(render_graph(g)) == g);
  }
}

TEST_CASE("apsp on named graphs") {
  auto p4 = apsp(path_graph(4));
  CHECK(p4(0, 3) == 3);
  CHECK(std::vector<int>(p4.eccentricities().begin(), p4.eccentricities().end()) == std::vector<int>{3, 2, 2, 3});
  CHECK(p4.radius() == 2);
  CHECK(p4.center() == 1);

  auto c5 = apsp(cycle_graph(5));
  CHECK(c5(0, 2) == 2);
  for (int v = 0; v < 5; ++v) CHECK(c5.ecc(v) == 2);
  CHECK(c5.radius() == 2);

  auto star = apsp(star_graph(5));
  CHECK(star(1, 2) == 2);
  CHECK(star.radius() == 1);

  auto split = apsp(make_graph(4, {{0, 1}, {2, 3}}));
  CHECK(!split.connected());
  CHECK(split(0, 2) == split.unreachable());
}

TEST_CASE("apsp matches Floyd-Warshall and metric axioms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 64);
    Graph g = random_connected(n, rng, 2.0 / n);
    auto dm = apsp(g);
    auto fw = floyd_warshall(g);
    for (int u = 0; u < n; ++u) {
      CHECK(dm(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        REQUIRE(dm(u, v) == fw[u][v]);
        CHECK(dm(u, v) == dm(v, u));
        CHECK((dm(u, v) == 1) == g.adjacent(u, v));
        for (int w = 0; w < n; ++w) CHECK(dm(u, w) <= dm(u, v) + dm(v, w));
      }
    }
    CHECK(dm.connected());
  }
}

TEST_CASE("apsp is identical across thread counts") {
  std::mt19937_64 rng(3);
  Graph g = random_connected(90, rng, 0.03);
  CHECK(apsp(g, 1) == apsp(g, 4));
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path_graph(4)));
  CHECK(!is_connected(make_graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(path_graph(1)));
}

TEST_CASE("induced_subgraph") {
  Graph p4 = path_graph(4);
  VertexSet keep(4);
  keep.insert(3);
  auto [k1, map1] = induced_subgraph(p4, keep);
  CHECK(k1.n() == 1);
  CHECK(map1 == std::vector<int>{3});

  keep.insert(0);
  keep.insert(1);
  auto [h, map2] = induced_subgraph(p4, keep);
  CHECK(h.n() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.adjacent(0, 1));
  CHECK(map2 == std::vector<int>{0, 1, 3});
  CHECK(!is_connected(h));

  Graph c5 = cycle_graph(5);
  auto [same, id] = induced_subgraph(c5, VertexSet::full(5));
  CHECK(same == c5);
  CHECK(id == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_THROWS(induced_subgraph(p4, VertexSet(4)));
}

TEST_CASE("induced subgraph distances never shrink") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 20);
    Graph g = random_connected(n, rng, 0.2);
    VertexSet keep(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 3) keep.insert(v);
    if (keep.empty()) continue;
    auto [h, map] = induced_subgraph(g, keep);
    auto dg = apsp(g);
    auto dh = apsp(h);
    for (int a = 0; a < h.n(); ++a)
      for (int b = 0; b < h.n(); ++b) CHECK(dh(a, b) >= dg(map[a], map[b]));
  }
}

TEST_CASE("VertexSet operations") {
  VertexSet a(130), b(130);
  for (int v : {0, 5, 64, 129}) a.insert(v);
  for (int v : {5, 63, 129}) b.insert(v);
  CHECK(a.count() == 4);
  CHECK((a & b).members() == std::vector<int>{5, 129});
  CHECK((a | b).count() == 5);
  CHECK((a - b).members() == std::vector<int>{0, 64});
  CHECK(a.intersects(b));
  CHECK((a & b).subset_of(a));
  CHECK(!a.subset_of(b));
  CHECK(a.next(6) == 64);
  CHECK(a.next(130) == -1);
  a.erase(0);
  CHECK(a.first() == 5);
  CHECK(VertexSet(70).empty());
  CHECK(VertexSet::full(70).count() == 70);
}

TEST_CASE("DisjointSet with activation") {
  DisjointSet ds(6);
  for (int v : {0, 1, 2, 4}) ds.activate(v);
  ds.unite(0, 1);
  ds.unite(1, 2);
  CHECK(ds.find(0) == ds.find(2));
  CHECK(ds.find(ds.find(2)) == ds.find(2));
  CHECK(ds.find(4) != ds.find(0));
  CHECK(ds.component_size(2) == 3);
  CHECK(ds.component_size(4) == 1);
  CHECK(ds.active_count() == 4);
  CHECK(!ds.active(3));

  // partition is independent of union order
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<int, int>> ops;
    for (int i = 0; i < 15; ++i) ops.emplace_back(rng() % 20, rng() % 20);
    DisjointSet x(20), y(20);
    for (int v = 0; v < 20; ++v) x.activate(v), y.activate(v);
    for (auto [a, b] : ops) x.unite(a, b);
    std::reverse(ops.begin(), ops.end());
    for (auto [a, b] : ops) y.unite(b, a);
    int total = 0;
    for (int u = 0; u < 20; ++u) {
      if (x.find(u) == u) total += x.component_size(u);
      for (int v = 0; v < 20; ++v) CHECK((x.find(u) == x.find(v)) == (y.find(u) == y.find(v)));
    }
    CHECK(total == 20);
  }
}
