#include "l2t/polytope.hpp"

#include <algorithm>
#include <sstream>

namespace l2t {

namespace {

// Exact LP feasibility: is p a convex combination of the points in s?
// Phase-1 simplex with Bland's rule on the system
//   sum_j l_j * s_j = p,  sum_j l_j = 1,  l_j >= 0.
bool in_convex_hull(const LatticePoint& p, const std::vector<LatticePoint>& s) {
  if (s.empty()) return false;
  const std::size_t m = p.size() + 1;  // equality constraints
  const std::size_t n = s.size();      // lambda variables
  std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n + m, Rat(0)));
  std::vector<Rat> rhs(m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(Int(s[j][i]));
    rhs[i] = Rat(Int(p[i]));
  }
  for (std::size_t j = 0; j < n; ++j) a[m - 1][j] = Rat(1);
  rhs[m - 1] = Rat(1);

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rhs[i] < 0) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
      rhs[i] = -rhs[i];
    }
    a[i][n + i] = Rat(1);
    basis[i] = n + i;
  }

  // Phase-1 objective: minimize the sum of artificials. Reduced-cost row for
  // that objective given the artificial basis.
  std::vector<Rat> cost(n + m, Rat(0));
  Rat obj(0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] += a[i][j];
    obj += rhs[i];
  }

  while (true) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] > 0) { enter = j; break; }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rat best(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i][enter] <= 0) continue;
      Rat ratio = rhs[i] / a[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;
    Rat piv = a[leave][enter];
    for (std::size_t j = 0; j < n + m; ++j) a[leave][j] /= piv;
    rhs[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || a[i][enter] == 0) continue;
      Rat f = a[i][enter];
      for (std::size_t j = 0; j < n + m; ++j) a[i][j] -= f * a[leave][j];
      rhs[i] -= f * rhs[leave];
    }
    Rat fc = cost[enter];
    for (std::size_t j = 0; j < n + m; ++j) cost[j] -= fc * a[leave][j];
    obj -= fc * rhs[leave];
    basis[leave] = enter;
  }
  return obj == 0;
}

LatticePoint lex_min_vertex(const IntPolytope& p) {
  return *std::min_element(p.vertices().begin(), p.vertices().end());
}

}  // namespace

IntPolytope IntPolytope::empty(int dim) {
  IntPolytope p;
  p.dim_ = dim;
  return p;
}

IntPolytope IntPolytope::point(LatticePoint pt) {
  IntPolytope p;
  p.dim_ = static_cast<int>(pt.size());
  p.vertices_.push_back(std::move(pt));
  return p;
}

IntPolytope IntPolytope::hull(int dim, std::vector<LatticePoint> points) {
  if (dim < 1) throw std::invalid_argument("polytope dimension must be >= 1");
  if (dim > 8) throw std::invalid_argument("polytope dimension capped at 8");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim) throw std::invalid_argument("point dimension mismatch");
  IntPolytope r;
  r.dim_ = dim;
  if (points.empty()) return r;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<LatticePoint> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!in_convex_hull(points[i], others)) r.vertices_.push_back(points[i]);
  }
  return r;
}

IntPolytope IntPolytope::translate(const LatticePoint& v) const {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
  IntPolytope r;
  r.dim_ = dim_;
  r.vertices_ = vertices_;
  for (auto& p : r.vertices_)
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += v[i];
  std::sort(r.vertices_.begin(), r.vertices_.end());
  return r;
}

IntPolytope IntPolytope::dilate(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative dilation");
  IntPolytope r;
  r.dim_ = dim_;
  if (is_empty()) return r;
  if (k == 0) {
    r.vertices_.push_back(LatticePoint(static_cast<std::size_t>(dim_), 0));
    return r;
  }
  r.vertices_ = vertices_;
  for (auto& p : r.vertices_)
    for (auto& x : p) x *= k;
  std::sort(r.vertices_.begin(), r.vertices_.end());
  return r;
}

std::string IntPolytope::str() const {
  if (is_empty()) return "{}";
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (std::size_t j = 0; j < vertices_[i].size(); ++j) {
      if (j) os << ",";
      os << vertices_[i][j];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

IntPolytope minkowski(const IntPolytope& p, const IntPolytope& q) {
  if (p.is_empty() || q.is_empty()) throw std::invalid_argument("minkowski sum of empty polytope");
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<LatticePoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      LatticePoint s = a;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
      sums.push_back(std::move(s));
    }
  return IntPolytope::hull(p.dim(), std::move(sums));
}

IntPolytope face(const Character& phi, const IntPolytope& p) {
  if (p.is_empty()) throw std::invalid_argument("face of empty polytope");
  if (phi.dim() != p.dim()) throw std::invalid_argument("dimension mismatch");
  std::optional<Rat> best;
  for (const auto& v : p.vertices()) {
    Rat x = phi.value(v);
    if (!best || x < *best) best = x;
  }
  std::vector<LatticePoint> keep;
  for (const auto& v : p.vertices())
    if (phi.value(v) == *best) keep.push_back(v);
  // Vertices of the face are vertices of p already; no re-reduction needed,
  // but hull() keeps the canonical ordering invariant.
  return IntPolytope::hull(p.dim(), std::move(keep));
}

PolytopeDiff::PolytopeDiff(IntPolytope p, IntPolytope m)
    : plus(std::move(p)), minus(std::move(m)) {
  if (plus.is_empty() || minus.is_empty())
    throw std::invalid_argument("polytope difference components must be non-empty");
  if (plus.dim() != minus.dim()) throw std::invalid_argument("dimension mismatch");
}

PolytopeDiff PolytopeDiff::of(IntPolytope p) {
  int d = p.dim();
  return PolytopeDiff(std::move(p),
                      IntPolytope::point(LatticePoint(static_cast<std::size_t>(d), 0)));
}

PolytopeDiff PolytopeDiff::operator+(const PolytopeDiff& o) const {
  return PolytopeDiff(minkowski(plus, o.plus), minkowski(minus, o.minus));
}

bool diff_equal(const PolytopeDiff& a, const PolytopeDiff& b) {
  return minkowski(a.plus, b.minus) == minkowski(b.plus, a.minus);
}

WhPolytope wh_normalize(const PolytopeDiff& d) {
  LatticePoint vp = lex_min_vertex(d.plus), vm = lex_min_vertex(d.minus);
  for (auto& x : vp) x = -x;
  for (auto& x : vm) x = -x;
  return {PolytopeDiff(d.plus.translate(vp), d.minus.translate(vm))};
}

bool wh_equal(const WhPolytope& a, const WhPolytope& b) {
  return diff_equal(a.diff, b.diff);
}

std::vector<VertexReport> fibered_report(const GroupRingElt& a) {
  if (a.is_zero()) throw std::invalid_argument("fibered report of zero element");
  IntPolytope p = poly_of_elt(a);
  std::vector<VertexReport> out;
  for (const auto& v : p.vertices()) {
    VertexReport r;
    r.vertex = v;
    r.coefficient = 0;
    for (const auto& [w, c] : a.terms()) {
      if (w.abelian() == v) {
        ++r.support_words;
        r.coefficient += c;
      }
    }
    Int abs = r.coefficient < 0 ? -r.coefficient : r.coefficient;
    r.monic = (r.support_words == 1) && abs == 1;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace l2t
