#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"

namespace bcast {

enum class ResidualKind { empty, singleton, connected, skipped_disconnected };
std::string_view to_string(ResidualKind kind);

/// One peeled ball (x, k) and the broadcast it leads to.
struct Candidate {
  int peel_center = 0;
  int peel_power = 0;
  ResidualKind residual_kind = ResidualKind::empty;
  std::int64_t total_cost = 0;  // 0 for skipped candidates
  Broadcast broadcast;
};

enum class PathRoutine { anchor_free, anchored };

struct PeelOptions {
  int threads = 1;
  // Skip (x, k) when k + 1 cannot beat the incumbent.
  bool prune = true;
  PathRoutine routine = PathRoutine::anchor_free;
  // Verify domination of every candidate and path-shape of every residual solve.
  bool self_check = false;
  bool record_candidates = false;
};

struct PeelStats {
  std::int64_t empty = 0;
  std::int64_t singleton = 0;
  std::int64_t connected = 0;
  std::int64_t disconnected = 0;
  std::int64_t pruned = 0;
};

struct OptimalSolution {
  Broadcast broadcast;
  // Winning peel ball, or nullopt when the radial broadcast was kept.
  std::optional<std::pair<int, int>> peel;
  PeelStats stats;
  std::vector<Candidate> candidates;  // sorted by (x, k) when recorded
  std::int64_t cost() const { return broadcast.cost(); }
};

/// Optimal dominating broadcast of a connected graph by peeling every ball
/// (x, k), 1 <= k <= rad(G), and solving the residual as a path-case
/// instance. Residual powers are capped at their eccentricity in G.
/// Among equal costs the radial broadcast wins, then the smallest (x, k).
/// The result does not depend on the thread count.
/// Throws disconnected_error.
OptimalSolution solve_optimal(const Graph& g, const PeelOptions& opts = {});

}  // namespace bcast
