#include "bcast/oracle.hpp"

#include <vector>

#include "bcast/errors.hpp"
#include "bcast/verify.hpp"

namespace bcast {

namespace {

class Enumerator {
public:
  Enumerator(const DistanceMatrix& dm, const std::function<bool(const Broadcast&)>& visit)
      : dm_(dm), visit_(visit), n_(dm.n()) {
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    balls_.resize(n_);
    for (int v = 0; v < n_; ++v) {
      balls_[v].assign(dm.ecc(v) + 1, 0);
      for (int p = 0; p <= dm.ecc(v); ++p)
        for (int x = 0; x < n_; ++x)
          if (dm(v, x) <= p) balls_[v][p] |= std::uint64_t{1} << x;
    }
  }

  // false when the visitor asked to stop
  bool run(int cost) {
    for (int s = 1; s <= std::min(cost, n_); ++s) {
      active_.resize(s);
      powers_.resize(s);
      for (int i = 0; i < s; ++i) active_[i] = i;
      while (true) {
        if (!assign(0, cost, 0)) return false;
        if (!next_combination()) break;
      }
    }
    return true;
  }

  std::int64_t explored = 0;

private:
  bool assign(std::size_t i, int remaining, std::uint64_t covered) {
    const int v = active_[i];
    const std::size_t last = active_.size() - 1;
    if (i == last) {
      if (remaining < 1 || remaining > dm_.ecc(v)) return true;
      ++explored;
      powers_[i] = remaining;
      if ((covered | balls_[v][remaining]) != full_) return true;
      Broadcast f;
      for (std::size_t j = 0; j < active_.size(); ++j) f.set(active_[j], powers_[j]);
      return visit_(f);
    }
    const int later = static_cast<int>(last - i);
    for (int p = 1; p <= std::min(dm_.ecc(v), remaining - later); ++p) {
      powers_[i] = p;
      if (!assign(i + 1, remaining - p, covered | balls_[v][p])) return false;
    }
    return true;
  }

  bool next_combination() {
    const int s = static_cast<int>(active_.size());
    int i = s - 1;
    while (i >= 0 && active_[i] == n_ - s + i) --i;
    if (i < 0) return false;
    ++active_[i];
    for (int j = i + 1; j < s; ++j) active_[j] = active_[j - 1] + 1;
    return true;
  }

  const DistanceMatrix& dm_;
  const std::function<bool(const Broadcast&)>& visit_;
  int n_;
  std::uint64_t full_ = 0;
  std::vector<std::vector<std::uint64_t>> balls_;
  std::vector<int> active_;
  std::vector<int> powers_;
};

OracleResult deepen(const Graph& g, int limit, bool path_only) {
  if (limit > kMaxOracleLimit) throw limit_error("oracle limit above " + std::to_string(kMaxOracleLimit));
  if (g.n() > limit)
    throw limit_error("oracle limited to " + std::to_string(limit) + " vertices, got " + std::to_string(g.n()));
  OracleResult out;
  if (g.n() == 1) return out;
  DistanceMatrix dm = apsp(g);
  if (!dm.connected()) throw disconnected_error();

  for (int c = 1; c <= dm.radius(); ++c) {
    bool found = false;
    out.explored += for_each_dominating(dm, c, [&](const Broadcast& f) {
      if (path_only) {
        if (!verify_efficient(dm, f).efficient) return true;
        if (!verify_path_shaped(dm, f).path_shaped) return true;
      }
      out.cost = c;
      out.witness = f;
      found = true;
      return false;
    });
    if (found) return out;
  }
  throw invariant_error("radial broadcast was not found by the oracle");
}

}  // namespace

std::int64_t for_each_dominating(const DistanceMatrix& dm, int cost,
                                 const std::function<bool(const Broadcast&)>& visit) {
  if (dm.n() > kMaxOracleLimit) throw limit_error("enumeration limited to 64 vertices");
  Enumerator e(dm, visit);
  e.run(cost);
  return e.explored;
}

OracleResult oracle_gamma_b(const Graph& g, int limit) { return deepen(g, limit, false); }

OracleResult oracle_gamma_path(const Graph& g, int limit) { return deepen(g, limit, true); }

}  // namespace bcast
