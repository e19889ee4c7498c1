#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"

namespace bcast {

// Definitional checks over the distance matrix. They are shared by the
// solvers and by the brute-force oracle.

struct DominatingCheck {
  bool dominating = false;
  std::optional<int> undominated;  // smallest undominated vertex
};

struct EfficientCheck {
  bool efficient = false;
  std::optional<std::pair<int, int>> overlap;  // first pair of centers whose balls meet
};

struct PathShapeCheck {
  bool path_shaped = false;
  std::optional<int> offending;  // a center of degree > 2, unreachable, or on a cycle
};

/// Flags plus witnesses. path_shape is only evaluated for efficient broadcasts.
struct Verdict {
  DominatingCheck dominating;
  EfficientCheck efficient;
  std::optional<PathShapeCheck> path_shape;
};

DominatingCheck verify_dominating(const DistanceMatrix& dm, const Broadcast& f);

// Balls of a and b are disjoint iff dist(a,b) > f(a) + f(b).
EfficientCheck verify_efficient(const DistanceMatrix& dm, const Broadcast& f);

/// Domination graph of an efficient broadcast, indexed like f.entries():
/// two balls touch iff dist(a,b) == f(a) + f(b) + 1.
std::vector<std::vector<int>> domination_graph(const DistanceMatrix& dm, const Broadcast& f);

/// Throws std::invalid_argument when f is not efficient.
PathShapeCheck verify_path_shaped(const DistanceMatrix& dm, const Broadcast& f);

Verdict verify_all(const DistanceMatrix& dm, const Broadcast& f);

}  // namespace bcast
