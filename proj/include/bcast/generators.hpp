#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "bcast/graph.hpp"

namespace bcast {

enum class Family { path, cycle, random_tree, sparse_random, barbell, star, wheel };

std::string_view to_string(Family f);
// Throws std::invalid_argument on an unknown name.
Family parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::path;
  int n = 1;
  std::uint64_t seed = 0;
  // sparse-random only; defaults to min(1, 2 ln n / n)
  std::optional<double> edge_probability;
};

/// Deterministic connected simple graph.
///   path      0-1-...-(n-1)
///   cycle     path plus (n-1)-0, n >= 3
///   random-tree  uniform labelled tree from a random Pruefer sequence
///   sparse-random  G(n, p) over pairs u < v in lexicographic order,
///                  redrawn until connected
///   barbell   cliques on the first and last floor(n/3) vertices joined by
///             a path through the middle vertices, n >= 6
///   star      hub 0, leaves 1..n-1
///   wheel     hub 0 joined to the cycle 1-2-...-(n-1)-1, n >= 4
/// Randomness: std::mt19937_64 seeded with `seed`; a bounded draw below b
/// rejects raw outputs under (2^64 - b) mod b and returns x mod b; a unit
/// draw is (x >> 11) * 2^-53.
/// Throws std::invalid_argument on invalid parameters.
Graph generate(const GeneratorSpec& spec);

}  // namespace bcast
