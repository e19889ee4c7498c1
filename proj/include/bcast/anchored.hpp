#pragma once

#include <cstdint>
#include <vector>

#include "bcast/path_dag.hpp"

namespace bcast {

struct AnchoredRun {
  int anchor = 0;
  std::int64_t cost = kNoPath;
  bool solved = false;
};

struct AnchoredSolution {
  Broadcast broadcast;
  std::vector<AnchoredRun> runs;
  std::int64_t cost() const { return broadcast.cost(); }
};

/// Benchmark comparator in the style of the per-anchor construction: for each
/// anchor u the state DAG is rebuilt and solved with only those source states
/// whose ball contains u. The best anchor wins (ties: smallest anchor).
/// O(n) rebuilds of an O(n^3) structure. Same contract as PathSolver::solve.
class AnchoredPathSolver {
public:
  AnchoredPathSolver() = default;

  AnchoredSolution solve(const Graph& h);
  AnchoredSolution solve(const Graph& h, const DistanceMatrix& dm);

private:
  ResidualTable rt_;
  RequirementTable req_;
  StateDag dag_;
  std::vector<char> allowed_;
};

AnchoredSolution solve_path_anchored(const Graph& h);

}  // namespace bcast
