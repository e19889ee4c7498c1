#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"

namespace bcast::testing {

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, edges); }

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, e);
}

// center 0
inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph(leaves + 1, e);
}

/// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(int n, std::mt19937_64& rng, double p) {
  std::vector<std::pair<int, int>> e;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (int i = 1; i < n; ++i) {
    int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    int a = perm[i], b = perm[j];
    e.emplace_back(a, b);
    has[a][b] = has[b][a] = true;
  }
  std::uniform_real_distribution<double> unit(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!has[u][v] && unit(rng) < p) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Every connected labelled graph on n vertices (edge subsets of K_n).
inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
  std::vector<std::pair<int, int>> e;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    e.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) e.push_back(pairs[i]);
    if (e.size() + 1 < static_cast<std::size_t>(n)) continue;
    Graph g(n, e);
    if (is_connected(g)) visit(g);
  }
}

/// Floyd-Warshall; unreachable = n.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, n));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int w : g.neighbors(u)) d[u][w] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Explicit ball as a bool vector, via Floyd-Warshall distances.
inline std::vector<bool> ball_set(const std::vector<std::vector<int>>& d, int c, int p) {
  std::vector<bool> b(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) b[x] = d[c][x] <= p;
  return b;
}

/// Naive reference: domination graph built from explicit inter-ball edges.
/// Returns {efficient, dominating, path_shaped, path_or_cycle}.
struct NaiveVerdict {
  bool dominating, efficient, path_shaped, path_or_cycle;
};

inline NaiveVerdict naive_verdict(const Graph& g, const std::vector<std::vector<int>>& d, const Broadcast& f) {
  const int n = g.n();
  auto active = f.entries();
  std::vector<std::vector<bool>> balls;
  for (auto& e : active) balls.push_back(ball_set(d, e.vertex, e.power));
  NaiveVerdict v{true, true, false, false};
  for (int x = 0; x < n; ++x) {
    bool cov = false;
    for (auto& b : balls) cov = cov || b[x];
    v.dominating = v.dominating && cov;
  }
  const std::size_t k = active.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (int x = 0; x < n; ++x)
        if (balls[i][x] && balls[j][x]) v.efficient = false;
  if (!v.efficient) return v;
  std::vector<std::vector<int>> adj(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool touch = false;
      for (int x = 0; x < n && !touch; ++x)
        if (balls[i][x])
          for (int y : g.neighbors(x))
            if (balls[j][y]) touch = true;
      if (touch) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  if (k == 0) {
    v.path_shaped = v.path_or_cycle = true;
    return v;
  }
  std::size_t edges = 0;
  bool deg_ok = true;
  for (auto& a : adj) {
    edges += a.size();
    deg_ok = deg_ok && a.size() <= 2;
  }
  edges /= 2;
  std::vector<bool> seen(k, false);
  std::vector<int> st{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!st.empty()) {
    int u = st.back();
    st.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        st.push_back(w);
      }
  }
  bool connected = reached == k;
  v.path_or_cycle = connected && deg_ok;
  v.path_shaped = v.path_or_cycle && edges == k - 1;
  return v;
}

/// Exhaustive minimum over all power vectors f(v) in [0, ecc(v)].
/// path_only restricts to efficient path-shaped broadcasts. n <= 7.
inline std::int64_t naive_optimum(const Graph& g, bool path_only) {
  const int n = g.n();
  if (n == 1) return 0;
  auto d = floyd_warshall(g);
  std::vector<int> ecc(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) ecc[u] = std::max(ecc[u], d[u][v]);
  std::vector<int> f(n, 0);
  std::int64_t best = -1;
  while (true) {
    std::int64_t cost = 0;
    for (int x : f) cost += x;
    if (best < 0 || cost < best) {
      Broadcast b;
      for (int v = 0; v < n; ++v) b.set(v, f[v]);
      auto verdict = naive_verdict(g, d, b);
      if (verdict.dominating && (!path_only || (verdict.efficient && verdict.path_shaped))) best = cost;
    }
    int i = 0;
    while (i < n && f[i] == ecc[i]) f[i++] = 0;
    if (i == n) break;
    ++f[i];
  }
  return best;
}

}  // namespace bcast::testing
