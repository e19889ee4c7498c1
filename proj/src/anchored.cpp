#include "bcast/anchored.hpp"

#include "bcast/errors.hpp"

namespace bcast {

AnchoredSolution AnchoredPathSolver::solve(const Graph& h) {
  if (h.n() == 1) return {Broadcast{}, {{0, 0, true}}};
  DistanceMatrix dm = apsp(h);
  return solve(h, dm);
}

AnchoredSolution AnchoredPathSolver::solve(const Graph& h, const DistanceMatrix& dm) {
  if (h.n() == 1) return {Broadcast{}, {{0, 0, true}}};
  if (!dm.connected()) throw disconnected_error();
  residual_decompositions_into(h, dm, rt_, 1);
  requirement_table_into(h, dm, rt_, req_, 1);

  AnchoredSolution out;
  DagPath best;
  for (int u = 0; u < h.n(); ++u) {
    build_dag_into(h, dm, rt_, req_, dag_, 1);
    auto states = dag_.states();
    allowed_.assign(states.size(), 0);
    for (std::size_t i = 0; i < states.size(); ++i)
      allowed_[i] = states[i].source() && dm(states[i].center, u) <= states[i].power;
    DagPath path = shortest_source_sink(dag_, allowed_);
    out.runs.push_back({u, path.cost, path.cost != kNoPath});
    if (path.cost < best.cost) {
      best = std::move(path);
      out.broadcast = broadcast_from_states(dag_, best.states);
    }
  }
  if (best.cost == kNoPath) throw invariant_error("no anchor admitted a source-to-sink path");
  return out;
}

AnchoredSolution solve_path_anchored(const Graph& h) {
  AnchoredPathSolver solver;
  return solver.solve(h);
}

}  // namespace bcast
