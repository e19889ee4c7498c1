#include "bcast/metric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bcast/disjoint_set.hpp"

namespace bcast {

Ball ball(const DistanceMatrix& dm, int center, int power) {
  Ball b{center, power, VertexSet(dm.n())};
  auto row = dm.row(center);
  for (int x = 0; x < dm.n(); ++x)
    if (row[x] <= power) b.members.insert(x);
  return b;
}

int ResidualTable::comp_size(int v, int p, int label) const {
  if (label >= 1 && label <= 2) return first_sizes_[slot(v, p)][label - 1];
  int count = 0;
  for (int z = 0; z < n_; ++z) count += this->label(v, p, z) == label;
  return count;
}

VertexSet ResidualTable::comp_members(int v, int p, int label) const {
  VertexSet s(n_);
  for (int z = 0; z < n_; ++z)
    if (this->label(v, p, z) == label) s.insert(z);
  return s;
}

void ResidualTable::dump_csv(std::ostream& out) const {
  out << "v,p,kappa,sizes\n";
  for (int v = 0; v < n_; ++v) {
    for (int p = 1; p <= radius_; ++p) {
      int k = kappa(v, p);
      out << v << ',' << p << ',' << k << ',';
      for (int l = 1; l <= k; ++l) out << (l > 1 ? ";" : "") << comp_size(v, p, l);
      out << '\n';
    }
  }
}

class ResidualBuilder {
public:
  ResidualBuilder(const Graph& g, const DistanceMatrix& dm, ResidualTable& out) : g_(g), dm_(dm), rt_(out) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("residual_decompositions: need n >= 2");
    if (n > std::numeric_limits<std::uint16_t>::max())
      throw std::invalid_argument("residual_decompositions: n exceeds 16-bit label range");
    if (!dm.connected()) throw std::invalid_argument("residual_decompositions: graph not connected");
    rt_.n_ = n;
    rt_.radius_ = dm.radius();
    const std::size_t balls = static_cast<std::size_t>(n) * rt_.radius_;
    rt_.kappa_.assign(balls, 0);
    rt_.first_sizes_.assign(balls, {0, 0});
    rt_.labels_.assign(balls * n, 0);
  }

  // Scratch owned by one worker.
  struct Scratch {
    DisjointSet dsu;
    std::vector<std::vector<int>> shells;
    std::vector<int> root_label;
    std::vector<int> root_stamp;
  };

  void center(int v, Scratch& s) {
    const int n = g_.n();
    const int rho = rt_.radius_;
    auto row = dm_.row(v);
    const int ecc = dm_.ecc(v);

    s.shells.assign(ecc + 1, {});
    for (int z = 0; z < n; ++z) s.shells[row[z]].push_back(z);
    s.dsu.reset(n);
    s.root_label.assign(n, 0);
    s.root_stamp.assign(n, 0);

    auto activate = [&](int z) {
      s.dsu.activate(z);
      for (int w : g_.neighbors(z))
        if (s.dsu.active(w)) s.dsu.unite(z, w);
    };

    // residual of B(v, rho) is everything farther than rho
    for (int d = rho + 1; d <= ecc; ++d)
      for (int z : s.shells[d]) activate(z);

    for (int p = rho; p >= 1; --p) {
      if (p < rho && p + 1 <= ecc)
        for (int z : s.shells[p + 1]) activate(z);
      const std::size_t sl = rt_.slot(v, p);
      std::uint16_t* labels = rt_.labels_.data() + sl * n;
      int next_label = 0;
      for (int z = 0; z < n; ++z) {
        if (!s.dsu.active(z)) continue;
        int root = s.dsu.find(z);
        if (s.root_stamp[root] != p) {
          s.root_stamp[root] = p;
          s.root_label[root] = ++next_label;
          if (next_label <= 2) rt_.first_sizes_[sl][next_label - 1] = s.dsu.component_size(root);
        }
        labels[z] = static_cast<std::uint16_t>(s.root_label[root]);
      }
      rt_.kappa_[sl] = next_label;
    }
  }

private:
  const Graph& g_;
  const DistanceMatrix& dm_;
  ResidualTable& rt_;
};

ResidualTable residual_decompositions(const Graph& g, const DistanceMatrix& dm, int threads) {
  ResidualTable rt;
  residual_decompositions_into(g, dm, rt, threads);
  return rt;
}

void residual_decompositions_into(const Graph& g, const DistanceMatrix& dm, ResidualTable& out,
                                  int threads) {
  ResidualBuilder builder(g, dm, out);
  const int n = g.n();
  if (threads <= 1) {
    ResidualBuilder::Scratch scratch;
    for (int v = 0; v < n; ++v) builder.center(v, scratch);
  } else {
#pragma omp parallel num_threads(threads)
    {
      ResidualBuilder::Scratch scratch;
#pragma omp for schedule(dynamic, 4)
      for (int v = 0; v < n; ++v) builder.center(v, scratch);
    }
  }
}

namespace {

void requirement_center(const DistanceMatrix& dm, const ResidualTable& rt, int v, std::uint16_t* req,
                        int radius) {
  const int n = dm.n();
  auto row = dm.row(v);
  for (int z = 0; z < n; ++z) {
    // z lies on the outer boundary of exactly one ball around v
    const int p = row[z] - 1;
    if (p < 1 || p > radius) continue;
    const int k = rt.kappa(v, p);
    if (k < 1 || k > 2) continue;
    const int label = rt.label(v, p, z);
    std::uint16_t* slice = req + ((static_cast<std::size_t>(p - 1) * 2 + (label - 1)) * n);
    auto zrow = dm.row(z);
    for (int w = 0; w < n; ++w)
      slice[w] = std::max<std::uint16_t>(slice[w], static_cast<std::uint16_t>(zrow[w]));
  }
}

}  // namespace

RequirementTable requirement_table(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                                   int threads) {
  RequirementTable out;
  requirement_table_into(g, dm, rt, out, threads);
  return out;
}

void requirement_table_into(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                            RequirementTable& out, int threads) {
  const int n = g.n();
  out.n_ = n;
  out.radius_ = rt.radius();
  const std::size_t per_center = static_cast<std::size_t>(out.radius_) * 2 * n;
  out.req_.assign(per_center * n, 0);
  if (threads <= 1) {
    for (int v = 0; v < n; ++v) requirement_center(dm, rt, v, out.req_.data() + v * per_center, out.radius_);
  } else {
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
    for (int v = 0; v < n; ++v) requirement_center(dm, rt, v, out.req_.data() + v * per_center, out.radius_);
  }
}

}  // namespace bcast
