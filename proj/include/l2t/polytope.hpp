#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "l2t/groupring.hpp"
#include "l2t/leading.hpp"

namespace l2t {

using LatticePoint = std::vector<std::int64_t>;

// Integral polytope given by its canonical (sorted, irredundant) vertex set.
// The empty polytope is a distinguished value.
class IntPolytope {
 public:
  IntPolytope() = default;  // empty, dim 0
  static IntPolytope empty(int dim);
  static IntPolytope point(LatticePoint p);
  // Convex hull: extreme points of the input set, in sorted order.
  static IntPolytope hull(int dim, std::vector<LatticePoint> points);

  int dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  bool is_point() const { return vertices_.size() == 1; }
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  IntPolytope translate(const LatticePoint& v) const;
  IntPolytope dilate(std::int64_t k) const;
  bool operator==(const IntPolytope& o) const {
    return dim_ == o.dim_ && vertices_ == o.vertices_;
  }

  std::string str() const;

 private:
  int dim_ = 0;
  std::vector<LatticePoint> vertices_;
};

// Minkowski sum (hull of pairwise vertex sums). Throws on empty input.
IntPolytope minkowski(const IntPolytope& p, const IntPolytope& q);

// Sub-polytope where phi attains its minimum.
IntPolytope face(const Character& phi, const IntPolytope& p);

// Convex hull of the homology classes of the support; no coefficient
// cancellation is applied. Throws on zero input.
template <class G>
IntPolytope poly_of_elt(const GroupRing<G>& a) {
  if (a.is_zero()) throw std::invalid_argument("polytope of zero element");
  std::vector<LatticePoint> pts;
  for (const auto& [g, c] : a.terms()) pts.push_back(g.abelian());
  return IntPolytope::hull(a.rank(), std::move(pts));
}

// Formal difference [plus] - [minus] in the polytope group P_Z(H).
struct PolytopeDiff {
  IntPolytope plus;
  IntPolytope minus;

  PolytopeDiff() = default;
  PolytopeDiff(IntPolytope p, IntPolytope m);

  static PolytopeDiff of(IntPolytope p);  // [p] - [origin]
  PolytopeDiff operator+(const PolytopeDiff& o) const;
  PolytopeDiff negate() const { return {minus, plus}; }
  PolytopeDiff dilate(std::int64_t k) const { return {plus.dilate(k), minus.dilate(k)}; }
};

// Equality in P_Z(H): one Minkowski-sum comparison.
bool diff_equal(const PolytopeDiff& a, const PolytopeDiff& b);

// Canonical representative modulo translation: plus and minus each shifted
// so their lex-minimal vertex is the origin.
struct WhPolytope {
  PolytopeDiff diff;
  bool is_zero() const { return diff.plus == diff.minus; }
};

WhPolytope wh_normalize(const PolytopeDiff& d);
bool wh_equal(const WhPolytope& a, const WhPolytope& b);

// Per-vertex monicity report: for each vertex of poly_of_elt(a), whether
// exactly one support word lands there with coefficient +-1. Such a vertex
// certifies that L_phi(a) is a trivial unit for every phi selecting it.
struct VertexReport {
  LatticePoint vertex;
  bool monic = false;
  Int coefficient;   // sum of coefficients of support words at this vertex
  int support_words = 0;
};

std::vector<VertexReport> fibered_report(const GroupRingElt& a);

}  // namespace l2t
