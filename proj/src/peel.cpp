#include "bcast/peel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>

#include <omp.h>

#include "bcast/anchored.hpp"
#include "bcast/errors.hpp"
#include "bcast/path_dag.hpp"
#include "bcast/verify.hpp"

namespace bcast {

std::string_view to_string(ResidualKind kind) {
  switch (kind) {
    case ResidualKind::empty: return "empty";
    case ResidualKind::singleton: return "singleton";
    case ResidualKind::connected: return "connected";
    case ResidualKind::skipped_disconnected: return "skipped-disconnected";
  }
  return "?";
}

namespace {

// (cost, key) packed so that integer order is lexicographic order.
std::uint64_t pack(std::int64_t cost, std::uint64_t key) {
  return (static_cast<std::uint64_t>(cost) << 32) | key;
}

struct Incumbent {
  std::uint64_t packed = ~std::uint64_t{0};
  Broadcast broadcast;
  std::optional<std::pair<int, int>> peel;
};

class Worker {
public:
  Worker(const Graph& g, const DistanceMatrix& dm, const PeelOptions& opts, std::atomic<std::uint64_t>& bound)
      : g_(g), dm_(dm), opts_(opts), bound_(bound), path_({1, opts.self_check}) {}

  void peel_center(int x) {
    const int n = g_.n();
    const int rho = dm_.radius();
    auto row = dm_.row(x);
    for (int k = 1; k <= rho; ++k) {
      const std::uint64_t key = 1 + static_cast<std::uint64_t>(x) * rho + (k - 1);
      VertexSet rest(n);
      for (int v = 0; v < n; ++v)
        if (row[v] > k) rest.insert(v);
      const int size = rest.count();

      Candidate c{x, k, ResidualKind::empty, 0, {}};
      if (size == 0) {
        c.broadcast.set(x, k);
        ++stats.empty;
      } else if (size == 1) {
        c.residual_kind = ResidualKind::singleton;
        c.broadcast.set(x, k);
        c.broadcast.set(rest.first(), 1);
        ++stats.singleton;
      } else {
        if (opts_.prune && pack(k + 1, key) > bound_.load(std::memory_order_relaxed)) {
          ++stats.pruned;
          continue;
        }
        auto [h, to_g] = induced_subgraph(g_, rest);
        if (!is_connected(h)) {
          c.residual_kind = ResidualKind::skipped_disconnected;
          ++stats.disconnected;
          if (opts_.record_candidates) candidates.push_back(std::move(c));
          continue;
        }
        c.residual_kind = ResidualKind::connected;
        ++stats.connected;
        Broadcast residual = opts_.routine == PathRoutine::anchored ? anchored_.solve(h).broadcast
                                                                     : path_.solve(h).broadcast;
        c.broadcast.set(x, k);
        for (auto& e : residual.entries()) {
          const int v = to_g[e.vertex];
          c.broadcast.set(v, std::min(e.power, dm_.ecc(v)));
        }
      }
      c.total_cost = c.broadcast.cost();
      if (opts_.self_check && !verify_dominating(dm_, c.broadcast).dominating)
        throw invariant_error("peel candidate does not dominate the graph");
      offer(pack(c.total_cost, key), c);
      if (opts_.record_candidates) candidates.push_back(std::move(c));
    }
  }

  void offer(std::uint64_t packed, const Candidate& c) {
    if (packed >= best.packed) return;
    best.packed = packed;
    best.broadcast = c.broadcast;
    best.peel = std::pair{c.peel_center, c.peel_power};
    auto cur = bound_.load(std::memory_order_relaxed);
    while (packed < cur && !bound_.compare_exchange_weak(cur, packed, std::memory_order_relaxed)) {
    }
  }

  Incumbent best;
  PeelStats stats;
  std::vector<Candidate> candidates;

private:
  const Graph& g_;
  const DistanceMatrix& dm_;
  const PeelOptions& opts_;
  std::atomic<std::uint64_t>& bound_;
  PathSolver path_;
  AnchoredPathSolver anchored_;
};

}  // namespace

OptimalSolution solve_optimal(const Graph& g, const PeelOptions& opts) {
  OptimalSolution out;
  if (g.n() == 1) return out;
  DistanceMatrix dm = apsp(g, opts.threads);
  if (!dm.connected()) throw disconnected_error();

  Incumbent best;
  best.broadcast.set(dm.center(), dm.radius());
  best.packed = pack(dm.radius(), 0);
  std::atomic<std::uint64_t> bound{best.packed};

  auto merge = [&](Worker& w) {
    if (w.best.packed < best.packed) best = std::move(w.best);
    out.stats.empty += w.stats.empty;
    out.stats.singleton += w.stats.singleton;
    out.stats.connected += w.stats.connected;
    out.stats.disconnected += w.stats.disconnected;
    out.stats.pruned += w.stats.pruned;
    for (auto& c : w.candidates) out.candidates.push_back(std::move(c));
  };

  const int n = g.n();
  if (opts.threads <= 1) {
    Worker w(g, dm, opts, bound);
    for (int x = 0; x < n; ++x) w.peel_center(x);
    merge(w);
  } else {
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::unique_ptr<Worker>> pool(opts.threads);
#pragma omp parallel num_threads(opts.threads)
    {
      auto& w = pool[omp_get_thread_num()];
      w = std::make_unique<Worker>(g, dm, opts, bound);
#pragma omp for schedule(dynamic, 1)
      for (int x = 0; x < n; ++x) {
        try {
          w->peel_center(x);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& w : pool)
      if (w) merge(*w);
  }

  std::sort(out.candidates.begin(), out.candidates.end(), [](const Candidate& a, const Candidate& b) {
    return std::pair(a.peel_center, a.peel_power) < std::pair(b.peel_center, b.peel_power);
  });
  out.broadcast = std::move(best.broadcast);
  out.peel = best.peel;
  return out;
}

}  // namespace bcast
