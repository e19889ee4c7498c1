#include "bcast/path_dag.hpp"

#include <algorithm>
#include <tuple>

#include "bcast/errors.hpp"
#include "bcast/verify.hpp"

namespace bcast {

namespace {

void append_states(const ResidualTable& rt, int v, int p, std::vector<State>& out) {
  const int k = rt.kappa(v, p);
  if (k == 0) {
    out.push_back({v, p, 0, 0, 0});
  } else if (k == 1) {
    out.push_back({v, p, 0, 1, 0});
    out.push_back({v, p, 1, 0, rt.comp_size(v, p, 1)});
  } else if (k == 2) {
    out.push_back({v, p, 1, 2, rt.comp_size(v, p, 1)});
    out.push_back({v, p, 2, 1, rt.comp_size(v, p, 2)});
  }
}

auto tie_key(const State& s) { return std::tuple(s.center, s.power, s.left); }

}  // namespace

std::vector<State> enumerate_states(const ResidualTable& rt) {
  std::vector<State> out;
  for (int v = 0; v < rt.n(); ++v)
    for (int p = 1; p <= rt.radius(); ++p) append_states(rt, v, p, out);
  return out;
}

bool arc_test(const State& s, const State& t, const DistanceMatrix& dm, const ResidualTable& rt,
              const RequirementTable& req) {
  if (s.right == 0 || t.left == 0) return false;
  if (t.power != dm(s.center, t.center) - s.power - 1) return false;
  if (t.power < 1 || t.power > rt.radius()) return false;
  if (rt.label(s.center, s.power, t.center) != s.right) return false;
  if (rt.label(t.center, t.power, s.center) != t.left) return false;
  return req(s.center, s.power, s.right, t.center) <= t.power &&
         req(t.center, t.power, t.left, s.center) <= s.power;
}

void StateDag::dump_dot(std::ostream& out) const {
  out << "digraph states {\n";
  for (std::size_t i = 0; i < states_.size(); ++i) {
    const auto& s = states_[i];
    out << "  s" << i << " [label=\"(" << s.center << ',' << s.power << ',' << s.left << ',' << s.right
        << ") w=" << s.power << "\"];\n";
  }
  for (std::size_t i = 0; i < states_.size(); ++i)
    for (int t : successors(static_cast<int>(i))) out << "  s" << i << " -> s" << t << ";\n";
  out << "}\n";
}

void build_dag_into(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                    const RequirementTable& req, StateDag& out, int threads) {
  const int n = g.n();
  const int rho = rt.radius();
  out.radius_ = rho;

  out.states_.clear();
  out.ball_first_.assign(static_cast<std::size_t>(n) * rho + 1, 0);
  for (int v = 0; v < n; ++v) {
    for (int p = 1; p <= rho; ++p) {
      out.ball_first_[static_cast<std::size_t>(v) * rho + (p - 1)] = static_cast<int>(out.states_.size());
      append_states(rt, v, p, out.states_);
    }
  }
  out.ball_first_.back() = static_cast<int>(out.states_.size());
  const auto& states = out.states_;
  const std::size_t count = states.size();

  out.heads_.assign(static_cast<std::size_t>(n) * rho * 2, -1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& t = states[i];
    if (t.left != 0)
      out.heads_[(static_cast<std::size_t>(t.center) * rho + (t.power - 1)) * 2 + (t.left - 1)] = static_cast<int>(i);
  }
  const auto* heads = out.heads_.data();

  // partner(v, p, w) = r when w lies in side r of B(v, p) and a ball on w of
  // power dist(v, w) - p - 1 covers everything side r needs
  const std::size_t slots = static_cast<std::size_t>(n) * rho;
  out.partner_.assign(slots * n, 0);
  auto fill_partner = [&](int v) {
    auto row = dm.row(v);
    for (int p = 1; p <= rho; ++p) {
      const int k = rt.kappa(v, p);
      if (k < 1 || k > 2) continue;
      std::uint8_t* dst = out.partner_.data() + (static_cast<std::size_t>(v) * rho + (p - 1)) * n;
      for (int w = 0; w < n; ++w) {
        const int r = rt.label(v, p, w);
        if (r != 0 && req(v, p, r, w) <= row[w] - p - 1) dst[w] = static_cast<std::uint8_t>(r);
      }
    }
  };
  const auto* partner = out.partner_.data();

  // Visits every arc whose tail is centered in [v0, v1); within a tail, heads
  // come out in ascending w. Centers and w run in tiles so that both the
  // (v, p, w) and (w, q, v) partner entries of a tile stay cache resident.
  constexpr int tile = 16;
  auto visit = [&](int v0, int v1, auto&& emit) {
    for (int w0 = 0; w0 < n; w0 += tile) {
      const int w1 = std::min(n, w0 + tile);
      for (int v = v0; v < v1; ++v) {
        auto row = dm.row(v);
        for (int p = 1; p <= rho; ++p) {
          auto [sb, se] = out.ball_states(v, p);
          int tails[2], tail_right[2];
          int nt = 0;
          for (int si = sb; si < se && nt < 2; ++si)
            if (states[si].right != 0) {
              tails[nt] = si;
              tail_right[nt++] = states[si].right;
            }
          if (nt == 0) continue;
          const std::uint8_t* own = partner + (static_cast<std::size_t>(v) * rho + (p - 1)) * n;
          for (int w = w0; w < w1; ++w) {
            const int r = own[w];
            if (r == 0) continue;
            const int q = row[w] - p - 1;
            if (q < 1 || q > rho) continue;
            const std::size_t head_slot = static_cast<std::size_t>(w) * rho + (q - 1);
            const int l = partner[head_slot * n + v];
            if (l == 0) continue;
            const int ti = heads[head_slot * 2 + (l - 1)];
            if (ti < 0) continue;
            for (int k = 0; k < nt; ++k)
              if (tail_right[k] == r) emit(tails[k], ti);
          }
        }
      }
    }
  };

  const int blocks = (n + tile - 1) / tile;
  auto for_blocks = [&](auto&& body) {
    if (threads <= 1) {
      for (int b = 0; b < blocks; ++b) body(b * tile, std::min(n, (b + 1) * tile));
    } else {
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
      for (int b = 0; b < blocks; ++b) body(b * tile, std::min(n, (b + 1) * tile));
    }
  };

  if (threads <= 1) {
    for (int v = 0; v < n; ++v) fill_partner(v);
  } else {
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
    for (int v = 0; v < n; ++v) fill_partner(v);
  }

  // counting pass, then fill pass into the flat adjacency
  out.counts_.assign(count, 0);
  for_blocks([&](int v0, int v1) { visit(v0, v1, [&](int si, int) { ++out.counts_[si]; }); });
  out.offsets_.assign(count + 1, 0);
  for (std::size_t i = 0; i < count; ++i) out.offsets_[i + 1] = out.offsets_[i] + out.counts_[i];
  out.targets_.resize(out.offsets_[count]);
  for (std::size_t i = 0; i < count; ++i) out.counts_[i] = out.offsets_[i];
  std::vector<char> cyclic(blocks, 0);
  for_blocks([&](int v0, int v1) {
    char& flag = cyclic[v0 / tile];
    visit(v0, v1, [&](int si, int ti) {
      if (states[ti].left_size <= states[si].left_size) flag = 1;
      out.targets_[out.counts_[si]++] = ti;
    });
  });
  if (std::find(cyclic.begin(), cyclic.end(), 1) != cyclic.end())
    throw invariant_error("state DAG arc does not increase left side size");

  // bucket sort on left_size in [0, n]
  std::vector<int> bucket(n + 2, 0);
  for (const auto& s : states) ++bucket[s.left_size + 1];
  for (int i = 0; i <= n; ++i) bucket[i + 1] += bucket[i];
  out.order_.resize(count);
  for (std::size_t i = 0; i < count; ++i) out.order_[bucket[states[i].left_size]++] = static_cast<int>(i);
}

StateDag build_dag(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                   const RequirementTable& req, int threads) {
  StateDag dag;
  build_dag_into(g, dm, rt, req, dag, threads);
  return dag;
}

DagPath shortest_source_sink(const StateDag& dag, std::span<const char> source_allowed) {
  const auto states = dag.states();
  const std::size_t count = states.size();
  std::vector<std::int64_t> d(count, kNoPath);
  std::vector<int> pred(count, -1);
  for (std::size_t i = 0; i < count; ++i)
    if (states[i].source() && (source_allowed.empty() || source_allowed[i])) d[i] = states[i].power;

  for (int i : dag.topological_order()) {
    if (d[i] == kNoPath) continue;
    for (int t : dag.successors(i)) {
      const std::int64_t nd = d[i] + states[t].power;
      if (nd < d[t] || (nd == d[t] && pred[t] >= 0 && tie_key(states[i]) < tie_key(states[pred[t]]))) {
        d[t] = nd;
        pred[t] = i;
      }
    }
  }

  int best = -1;
  for (std::size_t i = 0; i < count; ++i) {
    if (!states[i].sink() || d[i] == kNoPath) continue;
    if (best < 0 || d[i] < d[best] || (d[i] == d[best] && tie_key(states[i]) < tie_key(states[best])))
      best = static_cast<int>(i);
  }
  DagPath path;
  if (best < 0) return path;
  path.cost = d[best];
  for (int i = best; i >= 0; i = pred[i]) path.states.push_back(i);
  std::reverse(path.states.begin(), path.states.end());
  return path;
}

Broadcast broadcast_from_states(const StateDag& dag, std::span<const int> path) {
  Broadcast f;
  for (int i : path) {
    const auto& s = dag.state(i);
    if (f.power(s.center) != 0) throw invariant_error("center repeated on a source-to-sink path");
    f.set(s.center, s.power);
  }
  return f;
}

PathSolution PathSolver::solve(const Graph& h) {
  if (h.n() == 1) return {};
  DistanceMatrix dm = apsp(h, opts_.threads);
  return solve(h, dm);
}

PathSolution PathSolver::solve(const Graph& h, const DistanceMatrix& dm) {
  if (h.n() == 1) return {};
  if (!dm.connected()) throw disconnected_error();
  residual_decompositions_into(h, dm, rt_, opts_.threads);
  requirement_table_into(h, dm, rt_, req_, opts_.threads);
  build_dag_into(h, dm, rt_, req_, dag_, opts_.threads);

  DagPath path = shortest_source_sink(dag_);
  // the radial state of any center is a source-to-sink path on its own
  if (path.cost == kNoPath) throw invariant_error("state DAG has no source-to-sink path");

  PathSolution sol;
  sol.broadcast = broadcast_from_states(dag_, path.states);
  sol.stats = {dag_.state_count(), dag_.arc_count()};
  if (sol.broadcast.cost() != path.cost) throw invariant_error("path weight differs from broadcast cost");
  if (opts_.self_check) {
    auto verdict = verify_all(dm, sol.broadcast);
    if (!verdict.dominating.dominating || !verdict.efficient.efficient || !verdict.path_shape->path_shaped)
      throw invariant_error("path solver produced a broadcast that is not an efficient dominating path");
  }
  return sol;
}

PathSolution solve_path(const Graph& h, PathOptions opts) {
  PathSolver solver(opts);
  return solver.solve(h);
}

}  // namespace bcast
