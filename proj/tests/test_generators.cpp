#include <map>

#include "bcast/generators.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bcast;
using namespace bcast::testing;

TEST_CASE("generator examples") {
  CHECK(generate({Family::path, 4, 99}) == make_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(generate({Family::wheel, 5, 0}) ==
        make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4}}));
  CHECK(generate({Family::star, 6, 0}) == star_graph(5));
  CHECK(generate({Family::cycle, 5, 0}) == cycle_graph(5));
}

TEST_CASE("family names round-trip") {
  for (auto f : {Family::path, Family::cycle, Family::random_tree, Family::sparse_random, Family::barbell,
                 Family::star, Family::wheel})
    CHECK(parse_family(to_string(f)) == f);
  CHECK(to_string(Family::sparse_random) == "sparse-random");
  CHECK_THROWS_AS(parse_family("grid"), std::invalid_argument);
}

TEST_CASE("generators reject invalid parameters") {
  CHECK_THROWS_AS(generate({Family::path, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::cycle, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::wheel, 3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::barbell, 5, 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::sparse_random, 10, 0, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(generate({Family::sparse_random, 10, 0, 0.0}), std::invalid_argument);
  CHECK(generate({Family::sparse_random, 1, 0, 0.0}).n() == 1);
}

TEST_CASE("generated graphs are connected, simple and reproducible") {
  for (auto f : {Family::path, Family::cycle, Family::random_tree, Family::sparse_random, Family::barbell,
                 Family::star, Family::wheel})
    for (int n : {6, 7, 13, 40, 101})
      for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
        GeneratorSpec spec{f, n, seed};
        Graph g = generate(spec);
        CHECK(g.n() == n);
        CHECK(is_connected(g));
        CHECK(g == generate(spec));
        // strict construction rejects loops and duplicates
        CHECK_NOTHROW(Graph(n, g.edges(), true));
      }
}

TEST_CASE("family shapes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph t = generate({Family::random_tree, 30, seed});
    CHECK(t.edge_count() == 29);
  }
  CHECK(generate({Family::random_tree, 30, 1}) != generate({Family::random_tree, 30, 2}));
  CHECK(generate({Family::random_tree, 1, 0}).edge_count() == 0);
  CHECK(generate({Family::random_tree, 2, 0}).edge_count() == 1);

  // barbell n=10: cliques {0,1,2} and {7,8,9}, bridge 2-3-4-5-6-7
  Graph b = generate({Family::barbell, 10, 0});
  CHECK(b.edge_count() == 3 + 3 + 5);
  CHECK(b.adjacent(0, 2));
  CHECK(b.adjacent(7, 9));
  CHECK(b.adjacent(4, 5));
  CHECK(!b.adjacent(1, 3));
  CHECK(apsp(b)(0, 9) == 7);

  Graph w = generate({Family::wheel, 9, 0});
  CHECK(w.neighbors(0).size() == 8);
  for (int v = 1; v < 9; ++v) CHECK(w.neighbors(v).size() == 3);
}

TEST_CASE("Pruefer decoding yields every labelled tree uniformly") {
  // n=4 has 16 labelled trees; 16000 draws hit each about 1000 times
  std::map<std::vector<std::pair<int, int>>, int> seen;
  for (std::uint64_t seed = 0; seed < 16000; ++seed) ++seen[generate({Family::random_tree, 4, seed}).edges()];
  CHECK(seen.size() == 16);
  for (auto& [edges, count] : seen) {
    CHECK(count > 850);
    CHECK(count < 1150);
  }
}

TEST_CASE("sparse-random honours the edge probability") {
  Graph dense = generate({Family::sparse_random, 12, 3, 1.0});
  CHECK(dense.edge_count() == 66);
  long edges = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) edges += generate({Family::sparse_random, 30, seed, 0.3}).edge_count();
  double mean = static_cast<double>(edges) / 200;
  CHECK(mean > 0.27 * 435);
  CHECK(mean < 0.33 * 435);
}
