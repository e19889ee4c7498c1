#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <vector>

#include "bcast/broadcast.hpp"
#include "bcast/graph.hpp"
#include "bcast/metric.hpp"

namespace bcast {

/// An oriented ball: B(center, power) with residual component labels on the
/// left and right. Label 0 is the empty side.
struct State {
  int center = 0;
  int power = 0;
  int left = 0;
  int right = 0;
  int left_size = 0;

  int weight() const { return power; }
  bool source() const { return left == 0; }
  bool sink() const { return right == 0; }

  friend bool operator==(const State&, const State&) = default;
};

/// Radial balls give one state, kappa = 1 and kappa = 2 balls give two
/// (both orientations), kappa > 2 balls give none. Order: center, power,
/// then for kappa = 1 the source orientation first, for kappa = 2 (1,2)
/// before (2,1).
std::vector<State> enumerate_states(const ResidualTable& rt);

/// Constant-time arc test from label/distance/requirement lookups:
///   right(s) != 0 and left(t) != 0,
///   power(t) == dist(c_s, c_t) - power(s) - 1 within [1, radius],
///   c_t lies in the right side of s and c_s in the left side of t,
///   each ball covers the other's exposed frontier.
bool arc_test(const State& s, const State& t, const DistanceMatrix& dm, const ResidualTable& rt,
              const RequirementTable& req);

/// States plus forward arcs in CSR form. Every arc strictly increases left_size.
class StateDag {
public:
  std::span<const State> states() const { return states_; }
  const State& state(int i) const { return states_[i]; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t arc_count() const { return targets_.size(); }

  std::span<const int> successors(int i) const {
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  // States of ball (v, p): indices [first, last).
  std::pair<int, int> ball_states(int v, int p) const {
    auto s = static_cast<std::size_t>(v) * radius_ + (p - 1);
    return {ball_first_[s], ball_first_[s + 1]};
  }
  // Increasing left_size.
  std::span<const int> topological_order() const { return order_; }

  // Nodes labelled "(v,p,l,r) w=p".
  void dump_dot(std::ostream& out) const;

private:
  friend void build_dag_into(const Graph&, const DistanceMatrix&, const ResidualTable&,
                             const RequirementTable&, StateDag&, int);
  int radius_ = 0;
  std::vector<State> states_;
  std::vector<int> ball_first_;
  std::vector<std::size_t> offsets_;
  std::vector<int> targets_;
  std::vector<int> order_;
  std::vector<std::size_t> counts_;
  // build scratch: per (ball, left label) the state with that left side;
  // per (v, p, w) the label of w if its requirement fits, else 0
  std::vector<int> heads_;
  std::vector<std::uint8_t> partner_;
};

/// For every ordered (v, w, p) only q = dist(v,w) - p - 1 can be tight, so
/// arc enumeration is O(n^3). Two passes (count, fill) into flat storage,
/// parallel over centers when threads > 1. Throws invariant_error if an arc
/// fails to increase left_size.
void build_dag_into(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                    const RequirementTable& req, StateDag& out, int threads = 1);
StateDag build_dag(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                   const RequirementTable& req, int threads = 1);

inline constexpr std::int64_t kNoPath = std::numeric_limits<std::int64_t>::max();

struct DagPath {
  std::int64_t cost = kNoPath;
  std::vector<int> states;  // source first
};

/// Minimum-weight source-to-sink path by DP in topological order. When
/// source_allowed is non-empty, only flagged sources seed the DP. On equal
/// distance the predecessor with smaller (center, power, left) wins; the
/// same key breaks ties between sinks.
DagPath shortest_source_sink(const StateDag& dag, std::span<const char> source_allowed = {});

/// Broadcast assigning each state's power to its center. Throws
/// invariant_error if a center repeats.
Broadcast broadcast_from_states(const StateDag& dag, std::span<const int> path);

struct PathStats {
  std::size_t states = 0;
  std::size_t arcs = 0;
};

struct PathSolution {
  Broadcast broadcast;
  PathStats stats;
  std::int64_t cost() const { return broadcast.cost(); }
};

struct PathOptions {
  int threads = 1;
  // Re-verify every reconstructed broadcast (dominating, efficient, path).
  bool self_check = false;
};

/// Minimum-cost efficient dominating broadcast whose domination graph is a
/// path. Owns its tables so repeated solves reuse the same storage.
class PathSolver {
public:
  explicit PathSolver(PathOptions opts = {}) : opts_(opts) {}

  // Throws disconnected_error. K1 yields the zero broadcast.
  PathSolution solve(const Graph& h);

  // Same, with distances already computed for h.
  PathSolution solve(const Graph& h, const DistanceMatrix& dm);

  // Valid after a solve on n >= 2.
  const StateDag& dag() const { return dag_; }
  const ResidualTable& residuals() const { return rt_; }
  const RequirementTable& requirements() const { return req_; }

private:
  PathOptions opts_;
  ResidualTable rt_;
  RequirementTable req_;
  StateDag dag_;
};

PathSolution solve_path(const Graph& h, PathOptions opts = {});

}  // namespace bcast
