#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "l2t/groupring.hpp"
#include "l2t/matrix.hpp"

namespace l2t {

// Rational character on the free abelianization H_1; evaluated on group
// elements through their exponent-sum vectors. Rational coordinates keep all
// degree comparisons exact.
class Character {
 public:
  Character() = default;
  explicit Character(std::vector<Rat> values) : v_(std::move(values)) {}
  static Character zero(int dim) { return Character(std::vector<Rat>(static_cast<std::size_t>(dim), Rat(0))); }

  int dim() const { return static_cast<int>(v_.size()); }
  const std::vector<Rat>& values() const { return v_; }

  Rat value(const std::vector<std::int64_t>& abelian) const {
    if (abelian.size() != v_.size()) throw std::invalid_argument("character dim mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * Int(abelian[i]);
    return s;
  }

  template <class G>
  Rat value(const G& g) const { return value(g.abelian()); }

  bool is_zero() const {
    for (const auto& x : v_) if (x != 0) return false;
    return true;
  }

 private:
  std::vector<Rat> v_;
};

// phi-degree: a rational, or +infinity for the zero element.
struct Degree {
  bool infinite = false;
  Rat value;

  static Degree inf() { return {true, Rat(0)}; }
  static Degree of(Rat v) { return {false, std::move(v)}; }

  bool operator==(const Degree& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator<(const Degree& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  Degree operator+(const Degree& o) const {
    if (infinite || o.infinite) return inf();
    return of(value + o.value);
  }
  std::string str() const {
    if (infinite) return "inf";
    std::ostringstream os;
    os << value;
    return os.str();
  }
};

// Minimum of phi over the support; +infinity for zero.
template <class G>
Degree delta(const Character& phi, const GroupRing<G>& a) {
  if (a.is_zero()) return Degree::inf();
  std::optional<Rat> best;
  for (const auto& [g, c] : a.terms()) {
    Rat v = phi.value(g);
    if (!best || v < *best) best = v;
  }
  return Degree::of(*best);
}

// Sum of the terms attaining the minimal phi-value; L_phi(0) = 0.
template <class G>
GroupRing<G> leading_elt(const Character& phi, const GroupRing<G>& a) {
  if (a.is_zero()) return a;
  Degree d = delta(phi, a);
  GroupRing<G> r(a.rank());
  for (const auto& [g, c] : a.terms())
    if (phi.value(g) == d.value) r.add_term(g, c);
  return r;
}

template <class G>
bool is_phi_pure(const Character& phi, const GroupRing<G>& a) {
  return leading_elt(phi, a) == a;
}

// Global-minimum convention: the matrix degree is the minimum over all
// nonzero entries, and every entry keeps only its terms of that value.
template <class G>
Degree delta_matrix(const Character& phi, const Mat<GroupRing<G>>& m) {
  Degree best = Degree::inf();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Degree d = delta(phi, m.at(i, j));
      if (d < best) best = d;
    }
  return best;
}

template <class G>
Mat<GroupRing<G>> leading_matrix(const Character& phi, const Mat<GroupRing<G>>& m) {
  Degree dm = delta_matrix(phi, m);
  Mat<GroupRing<G>> r(m.rows(), m.cols(), m.rank());
  if (dm.infinite) return r;  // zero matrix
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      GroupRing<G> e(m.rank());
      for (const auto& [g, c] : m.at(i, j).terms())
        if (phi.value(g) == dm.value) e.add_term(g, c);
      r.at(i, j) = e;
    }
  return r;
}

}  // namespace l2t
