#include "bcast/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bcast/errors.hpp"

namespace bcast {

void Broadcast::set(int vertex, int power) {
  if (power < 0) throw std::invalid_argument("negative broadcast power");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), vertex,
                             [](const Entry& e, int v) { return e.vertex < v; });
  bool found = it != entries_.end() && it->vertex == vertex;
  if (power == 0) {
    if (found) entries_.erase(it);
  } else if (found) {
    it->power = power;
  } else {
    entries_.insert(it, Entry{vertex, power});
  }
}

int Broadcast::power(int vertex) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), vertex,
                             [](const Entry& e, int v) { return e.vertex < v; });
  return it != entries_.end() && it->vertex == vertex ? it->power : 0;
}

std::int64_t Broadcast::cost() const {
  std::int64_t c = 0;
  for (auto& e : entries_) c += e.power;
  return c;
}

Broadcast parse_broadcast(std::string_view text) {
  Broadcast f;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long v = 0, p = 0;
    if (!(ls >> v)) continue;
    std::string rest;
    if (!(ls >> p) || (ls >> rest) || v < 0 || p < 0)
      throw parse_error("broadcast line " + std::to_string(line_no) + ": expected 'vertex power'");
    if (f.power(static_cast<int>(v)) != 0)
      throw parse_error("broadcast line " + std::to_string(line_no) + ": vertex listed twice");
    f.set(static_cast<int>(v), static_cast<int>(p));
  }
  return f;
}

std::string render_broadcast(const Broadcast& f) {
  std::string out;
  for (auto& e : f.entries()) out += std::to_string(e.vertex) + ' ' + std::to_string(e.power) + '\n';
  return out;
}

std::string format_assignment(const Broadcast& f) {
  std::string out;
  for (auto& e : f.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.vertex) + ':' + std::to_string(e.power);
  }
  return out;
}

namespace {

void check_range(const DistanceMatrix& dm, const Broadcast& f) {
  for (auto& e : f.entries())
    if (e.vertex >= dm.n()) throw std::invalid_argument("broadcast vertex out of range");
}

}  // namespace

DominatingCheck verify_dominating(const DistanceMatrix& dm, const Broadcast& f) {
  check_range(dm, f);
  if (dm.n() == 1) return {true, std::nullopt};  // the zero broadcast dominates K1
  for (int u = 0; u < dm.n(); ++u) {
    bool covered = false;
    for (auto& e : f.entries()) {
      if (dm(u, e.vertex) <= e.power) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, u};
  }
  return {true, std::nullopt};
}

EfficientCheck verify_efficient(const DistanceMatrix& dm, const Broadcast& f) {
  check_range(dm, f);
  auto active = f.entries();
  for (std::size_t i = 0; i < active.size(); ++i)
    for (std::size_t j = i + 1; j < active.size(); ++j)
      if (dm(active[i].vertex, active[j].vertex) <= active[i].power + active[j].power)
        return {false, std::pair{active[i].vertex, active[j].vertex}};
  return {true, std::nullopt};
}

std::vector<std::vector<int>> domination_graph(const DistanceMatrix& dm, const Broadcast& f) {
  auto active = f.entries();
  std::vector<std::vector<int>> adj(active.size());
  for (std::size_t i = 0; i < active.size(); ++i) {
    for (std::size_t j = i + 1; j < active.size(); ++j) {
      if (dm(active[i].vertex, active[j].vertex) == active[i].power + active[j].power + 1) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  }
  return adj;
}

PathShapeCheck verify_path_shaped(const DistanceMatrix& dm, const Broadcast& f) {
  if (!verify_efficient(dm, f).efficient)
    throw std::invalid_argument("verify_path_shaped: broadcast is not efficient");
  auto active = f.entries();
  // zero broadcast: the empty domination graph, path-shaped by convention (K1)
  if (active.empty()) return {true, std::nullopt};
  auto adj = domination_graph(dm, f);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < adj.size(); ++i) {
    if (adj[i].size() > 2) return {false, active[i].vertex};
    edges += adj[i].size();
  }
  edges /= 2;
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (std::size_t i = 0; i < adj.size(); ++i)
    if (!seen[i]) return {false, active[i].vertex};
  // connected with max degree 2: a path unless it closes into a cycle
  if (edges != adj.size() - 1) return {false, active[0].vertex};
  return {true, std::nullopt};
}

Verdict verify_all(const DistanceMatrix& dm, const Broadcast& f) {
  Verdict v;
  v.dominating = verify_dominating(dm, f);
  v.efficient = verify_efficient(dm, f);
  if (v.efficient.efficient) v.path_shape = verify_path_shaped(dm, f);
  return v;
}

}  // namespace bcast
