#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace bcast {

/// Fixed-width bit-vector over vertex indices [0, size).
/// Binary operations require both operands to have the same width.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static VertexSet full(int size) {
    VertexSet s(size);
    for (int v = 0; v < size; ++v) s.insert(v);
    return s;
  }

  int size() const { return size_; }

  bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // set difference
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // Smallest member, or -1.
  int first() const { return next(0); }

  // Smallest member >= from, or -1.
  int next(int from) const {
    if (from >= size_) return -1;
    std::size_t wi = static_cast<std::size_t>(from >> 6);
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
      if (++wi == words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int v = first(); v != -1; v = next(v + 1)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace bcast
