#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bcast/vertex_set.hpp"

namespace bcast {

/// Immutable simple undirected graph on dense vertex indices [0, n).
class Graph {
public:
  Graph() = default;

  // Builds from an edge list. Throws parse_error on self-loops or
  // out-of-range endpoints; duplicates throw when strict, else collapse.
  Graph(int n, std::span<const std::pair<int, int>> edges, bool strict = true);

  int n() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  const VertexSet& neighbor_set(int v) const { return adj_set_[v]; }
  bool adjacent(int u, int v) const { return adj_set_[u].contains(v); }

  // Edges (u < v) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> adj_set_;
};

/// Edge-list text: first non-comment line is n, then one "u v" per line.
/// '#' starts a comment. Throws parse_error.
Graph parse_graph(std::string_view text, bool strict = true);

/// Inverse of parse_graph; edges emitted in lexicographic order.
std::string render_graph(const Graph& g);

/// All-pairs hop distances. Unreachable pairs hold unreachable() (== n).
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, n), ecc_(n, 0) {}

  int n() const { return n_; }
  int unreachable() const { return n_; }

  int operator()(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(int u, int v) { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(int u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }

  int ecc(int v) const { return ecc_[v]; }
  std::span<const int> eccentricities() const { return ecc_; }
  int radius() const { return radius_; }
  bool connected() const { return connected_; }

  // Smallest-index vertex of minimum eccentricity.
  int center() const;

  // Recompute ecc/radius/connected from the distance entries.
  void finalize();

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
  int n_ = 0;
  std::vector<int> dist_;
  std::vector<int> ecc_;
  int radius_ = 0;
  bool connected_ = true;
};

/// BFS from every vertex; OpenMP over sources when threads > 1.
DistanceMatrix apsp(const Graph& g, int threads = 1);

bool is_connected(const Graph& g);

/// Subgraph induced by keep, renumbered densely in ascending original order.
/// second[i] is the original index of new vertex i. Throws on empty keep.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace bcast
