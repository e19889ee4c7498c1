#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "bcast/graph.hpp"
#include "bcast/vertex_set.hpp"

namespace bcast {

struct Ball {
  int center = 0;
  int power = 0;
  VertexSet members;
};

/// { x : dist(center, x) <= power }
Ball ball(const DistanceMatrix& dm, int center, int power);

/// Connected components of G - B(v,p) for every center v and every
/// 1 <= p <= radius. Labels are 1..kappa, assigned in order of the smallest
/// vertex of each component; 0 marks vertices inside the ball.
class ResidualTable {
public:
  ResidualTable() = default;

  int n() const { return n_; }
  int radius() const { return radius_; }

  int kappa(int v, int p) const { return kappa_[slot(v, p)]; }
  bool kept(int v, int p) const { return kappa(v, p) <= 2; }
  int label(int v, int p, int z) const {
    return labels_[static_cast<std::size_t>(slot(v, p)) * n_ + z];
  }
  // Any label in 1..kappa; O(1) for labels 1 and 2, O(n) beyond.
  int comp_size(int v, int p, int label) const;
  VertexSet comp_members(int v, int p, int label) const;

  // CSV "v,p,kappa,sizes" with sizes joined by ';'.
  void dump_csv(std::ostream& out) const;

  friend bool operator==(const ResidualTable&, const ResidualTable&) = default;

private:
  friend class ResidualBuilder;
  std::size_t slot(int v, int p) const { return static_cast<std::size_t>(v) * radius_ + (p - 1); }

  int n_ = 0;
  int radius_ = 0;
  std::vector<int> kappa_;
  std::vector<std::array<int, 2>> first_sizes_;
  std::vector<std::uint16_t> labels_;
};

/// Incremental shell activation with a disjoint-set per center: O(n^2) per
/// center, O(n^3) total. Centers run in parallel when threads > 1.
/// Requires g connected and n >= 2.
ResidualTable residual_decompositions(const Graph& g, const DistanceMatrix& dm, int threads = 1);
// Reuses out's storage.
void residual_decompositions_into(const Graph& g, const DistanceMatrix& dm, ResidualTable& out,
                                  int threads = 1);

/// req(v,p,C,w) = max{ dist(w,z) : z in N(B(v,p)) and z in C }, 0 on empty.
/// Filled only for kept balls with kappa >= 1 and labels 1, 2.
class RequirementTable {
public:
  RequirementTable() = default;

  int operator()(int v, int p, int label, int w) const {
    return req_[(slot(v, p, label)) * n_ + w];
  }

  friend bool operator==(const RequirementTable&, const RequirementTable&) = default;

private:
  friend void requirement_table_into(const Graph&, const DistanceMatrix&, const ResidualTable&,
                                     RequirementTable&, int);
  std::size_t slot(int v, int p, int label) const {
    return (static_cast<std::size_t>(v) * radius_ + (p - 1)) * 2 + (label - 1);
  }

  int n_ = 0;
  int radius_ = 0;
  std::vector<std::uint16_t> req_;
};

RequirementTable requirement_table(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                                   int threads = 1);
void requirement_table_into(const Graph& g, const DistanceMatrix& dm, const ResidualTable& rt,
                            RequirementTable& out, int threads = 1);

}  // namespace bcast
