#pragma once

#include <cstdint>
#include <functional>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"

namespace bcast {

// Brute-force ground truth. Depends only on graph-core and the definitional
// checks in verify.hpp.

inline constexpr int kDefaultOracleLimit = 12;
inline constexpr int kMaxOracleLimit = 64;

struct OracleResult {
  std::int64_t cost = 0;
  Broadcast witness;
  std::int64_t explored = 0;  // candidate broadcasts examined
};

/// Visits every broadcast of total cost exactly `cost` with each active
/// power in [1, ecc(v)], by active-set size, then active sets in
/// lexicographic order, then power vectors in lexicographic order. Only
/// dominating broadcasts reach `visit`; return false to stop.
/// Returns the number of candidates examined.
std::int64_t for_each_dominating(const DistanceMatrix& dm, int cost,
                                 const std::function<bool(const Broadcast&)>& visit);

/// Iterative deepening on cost 1..rad(G); first dominating broadcast wins.
/// Throws limit_error when n > limit, disconnected_error.
OracleResult oracle_gamma_b(const Graph& g, int limit = kDefaultOracleLimit);

/// Same search; feasibility also requires efficiency and a path-shaped
/// domination graph.
OracleResult oracle_gamma_path(const Graph& g, int limit = kDefaultOracleLimit);

}  // namespace bcast
