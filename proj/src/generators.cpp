#include "bcast/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcast {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::random_tree: return "random-tree";
    case Family::sparse_random: return "sparse-random";
    case Family::barbell: return "barbell";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto f : {Family::path, Family::cycle, Family::random_tree, Family::sparse_random, Family::barbell,
                 Family::star, Family::wheel})
    if (to_string(f) == name) return f;
  throw std::invalid_argument("unknown graph family: " + std::string(name));
}

namespace {

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

using Edges = std::vector<std::pair<int, int>>;

Edges path_edges(int first, int last) {
  Edges e;
  for (int v = first; v < last; ++v) e.emplace_back(v, v + 1);
  return e;
}

Edges pruefer_tree(int n, std::mt19937_64& rng) {
  Edges e;
  if (n == 2) e.emplace_back(0, 1);
  if (n <= 2) return e;
  std::vector<int> seq(n - 2);
  for (auto& s : seq) s = static_cast<int>(below(rng, n));
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  // linear-time decode
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    e.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  e.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return e;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
  std::mt19937_64 rng(spec.seed);
  Edges edges;
  switch (spec.family) {
    case Family::path:
      edges = path_edges(0, n - 1);
      break;
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      edges = path_edges(0, n - 1);
      edges.emplace_back(0, n - 1);
      break;
    case Family::random_tree:
      edges = pruefer_tree(n, rng);
      break;
    case Family::sparse_random: {
      double p = spec.edge_probability.value_or(n > 1 ? std::min(1.0, 2.0 * std::log(n) / n) : 0.0);
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
      if (n == 1) break;
      for (int attempt = 0; attempt < 10000; ++attempt) {
        edges.clear();
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g)) return g;
      }
      throw std::invalid_argument("sparse-random: no connected sample in 10000 attempts; raise p");
    }
    case Family::barbell: {
      if (n < 6) throw std::invalid_argument("barbell needs n >= 6");
      const int bell = n / 3;
      for (int u = 0; u < bell; ++u)
        for (int v = u + 1; v < bell; ++v) edges.emplace_back(u, v);
      for (int u = n - bell; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      auto bridge = path_edges(bell - 1, n - bell);
      edges.insert(edges.end(), bridge.begin(), bridge.end());
      break;
    }
    case Family::star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Family::wheel:
      if (n < 4) throw std::invalid_argument("wheel needs n >= 4");
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      edges.emplace_back(1, n - 1);
      for (int v = 1; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
  }
  return Graph(n, edges);
}

}  // namespace bcast
