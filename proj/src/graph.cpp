#include "bcast/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <sstream>

#include "bcast/errors.hpp"

namespace bcast {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges, bool strict)
    : n_(n), adj_(n), adj_set_(n, VertexSet(n)) {
  if (n < 1) throw parse_error("graph must have at least one vertex");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u));
    if (adj_set_[u].contains(v)) {
      if (strict)
        throw parse_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      continue;
    }
    adj_set_[u].insert(v);
    adj_set_[v].insert(u);
    ++edge_count_;
  }
  for (int v = 0; v < n; ++v) adj_[v] = adj_set_[v].members();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

// Splits a line into integer tokens, stopping at '#'.
std::vector<long long> tokens(std::string_view line, int line_no) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j)
      throw parse_error("line " + std::to_string(line_no) + ": not an integer: '" +
                        std::string(line.substr(i, j - i)) + "'");
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, bool strict) {
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tok = tokens(line, line_no);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 1) throw parse_error("line " + std::to_string(line_no) + ": expected vertex count");
      n = tok[0];
      if (n < 1 || n > 1'000'000) throw parse_error("vertex count out of range: " + std::to_string(n));
      continue;
    }
    if (tok.size() != 2) throw parse_error("line " + std::to_string(line_no) + ": expected 'u v'");
    if (tok[0] < 0 || tok[1] < 0 || tok[0] >= n || tok[1] >= n)
      throw parse_error("line " + std::to_string(line_no) + ": vertex index out of range");
    edges.emplace_back(static_cast<int>(tok[0]), static_cast<int>(tok[1]));
  }
  if (n < 0) throw parse_error("empty input");
  return Graph(static_cast<int>(n), edges, strict);
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

int DistanceMatrix::center() const {
  for (int v = 0; v < n_; ++v)
    if (ecc_[v] == radius_) return v;
  return -1;
}

void DistanceMatrix::finalize() {
  connected_ = true;
  radius_ = n_;
  for (int u = 0; u < n_; ++u) {
    int e = 0;
    for (int v = 0; v < n_; ++v) e = std::max(e, (*this)(u, v));
    ecc_[u] = e;
    if (e >= n_) connected_ = false;
    radius_ = std::min(radius_, e);
  }
}

namespace {

void bfs_row(const Graph& g, int source, int* row, std::vector<int>& queue) {
  const int n = g.n();
  std::fill(row, row + n, n);
  queue.clear();
  row[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : g.neighbors(u)) {
      if (row[w] == n) {
        row[w] = row[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DistanceMatrix apsp(const Graph& g, int threads) {
  const int n = g.n();
  DistanceMatrix dm(n);
  if (threads <= 1) {
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) bfs_row(g, s, &dm.at(s, 0), queue);
  } else {
#pragma omp parallel num_threads(threads)
    {
      std::vector<int> queue;
      queue.reserve(n);
#pragma omp for schedule(dynamic, 8)
      for (int s = 0; s < n; ++s) bfs_row(g, s, &dm.at(s, 0), queue);
    }
  }
  dm.finalize();
  return dm;
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.n(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.n();
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> to_old = keep.members();
  if (to_old.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> to_new(g.n(), -1);
  for (std::size_t i = 0; i < to_old.size(); ++i) to_new[to_old[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : to_old)
    for (int w : g.neighbors(u))
      if (u < w && to_new[w] >= 0) edges.emplace_back(to_new[u], to_new[w]);
  return {Graph(static_cast<int>(to_old.size()), edges), std::move(to_old)};
}

}  // namespace bcast
