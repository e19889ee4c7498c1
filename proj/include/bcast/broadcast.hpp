#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bcast {

/// Vertex -> power assignment. Only positive powers are stored, sorted by vertex.
class Broadcast {
public:
  struct Entry {
    int vertex;
    int power;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Broadcast() = default;

  // Power 0 removes the vertex. Negative power throws std::invalid_argument.
  void set(int vertex, int power);
  int power(int vertex) const;

  std::span<const Entry> entries() const { return entries_; }
  std::size_t active_count() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::int64_t cost() const;

  friend bool operator==(const Broadcast&, const Broadcast&) = default;

private:
  std::vector<Entry> entries_;
};

/// "vertex power" per line, '#' comments. Throws parse_error.
Broadcast parse_broadcast(std::string_view text);
std::string render_broadcast(const Broadcast& f);

// "1:1 4:1", empty string for the zero broadcast.
std::string format_assignment(const Broadcast& f);

}  // namespace bcast
