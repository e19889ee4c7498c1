#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace bcast {

/// Union-find over [0, n) with lazy activation: an element takes part in
/// unions only after activate() and the per-root size counts active members.
class DisjointSet {
public:
  explicit DisjointSet(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
    rank_.assign(n, 0);
    size_.assign(n, 0);
    active_.assign(n, false);
    active_count_ = 0;
  }

  void activate(int x) {
    if (active_[x]) return;
    active_[x] = true;
    size_[x] = 1;
    ++active_count_;
  }
  bool active(int x) const { return active_[x]; }
  int active_count() const { return active_count_; }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns the surviving root.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
  }

  int component_size(int x) { return size_[find(x)]; }

private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<int> size_;
  std::vector<bool> active_;
  int active_count_ = 0;
};

}  // namespace bcast
