#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "l2t/ints.hpp"
#include "l2t/monomial.hpp"
#include "l2t/word.hpp"

namespace l2t {

// Integral group ring of the group modeled by G (Word for free groups,
// Monomial for free abelian groups). Terms are kept in a sorted map, so
// iteration order is the canonical display order; no zero coefficients are
// stored.
template <class G>
class GroupRing {
 public:
  using Group = G;
  using Terms = std::map<G, Int>;

  GroupRing() = default;
  explicit GroupRing(int rank) : rank_(rank) {}

  static GroupRing zero(int rank) { return GroupRing(rank); }
  static GroupRing one(int rank) { return term(G::identity(rank), 1); }
  static GroupRing term(const G& g, Int coeff) {
    GroupRing a(g.rank());
    if (coeff != 0) a.terms_.emplace(g, std::move(coeff));
    return a;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Int coeff(const G& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Int(0) : it->second;
  }

  std::vector<G> support() const {
    std::vector<G> s;
    s.reserve(terms_.size());
    for (const auto& [g, c] : terms_) s.push_back(g);
    return s;
  }

  void add_term(const G& g, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GroupRing operator+(const GroupRing& o) const {
    check_rank(o);
    GroupRing r = *this;
    for (const auto& [g, c] : o.terms_) r.add_term(g, c);
    return r;
  }
  GroupRing operator-() const {
    GroupRing r = *this;
    for (auto& [g, c] : r.terms_) c = -c;
    return r;
  }
  GroupRing operator-(const GroupRing& o) const { return *this + (-o); }

  GroupRing operator*(const GroupRing& o) const {
    check_rank(o);
    GroupRing r(rank_);
    for (const auto& [g1, c1] : terms_)
      for (const auto& [g2, c2] : o.terms_) r.add_term(g1 * g2, c1 * c2);
    return r;
  }

  GroupRing operator*(const Int& c) const {
    GroupRing r(rank_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [g, v] : r.terms_) v *= c;
    return r;
  }

  // Left and right translations by a group element.
  GroupRing left_mul(const G& g) const {
    GroupRing r(rank_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(g * w, c);
    return r;
  }
  GroupRing right_mul(const G& g) const {
    GroupRing r(rank_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w * g, c);
    return r;
  }

  // The involution sending sum of c_g * g to sum of c_g * g^-1.
  GroupRing involute() const {
    GroupRing r(rank_);
    for (const auto& [g, c] : terms_) r.terms_.emplace(g.inverse(), c);
    return r;
  }

  bool operator==(const GroupRing& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  // Returns (sign, g) when the element is exactly +-g, i.e. a trivial unit.
  std::optional<std::pair<int, G>> as_trivial_unit() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [g, c] = *terms_.begin();
    if (c == 1) return std::make_pair(1, g);
    if (c == -1) return std::make_pair(-1, g);
    return std::nullopt;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
      Int a = c;
      if (first) {
        if (a < 0) { os << "-"; a = -a; }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (a != 1 || g.is_identity()) {
        os << a.str();
        if (!g.is_identity()) os << "*";
      }
      if (!g.is_identity()) os << g.str();
    }
    return os.str();
  }

 private:
  int rank_ = 0;
  Terms terms_;

  void check_rank(const GroupRing& o) const {
    if (rank_ != o.rank_) throw std::invalid_argument("group ring rank mismatch");
  }
};

using GroupRingElt = GroupRing<Word>;   // Z[F_rank]
using Laurent = GroupRing<Monomial>;    // Z[t1^+-, ..., t_rank^+-]

// Abelianization Z[F] -> Z[Z^rank]; a ring homomorphism collecting
// coefficients with cancellation.
inline Laurent abelianize(const GroupRingElt& a) {
  Laurent r(a.rank());
  for (const auto& [w, c] : a.terms()) r.add_term(Monomial(w.abelian()), c);
  return r;
}
inline const Laurent& abelianize(const Laurent& a) { return a; }

// True iff a = +-w * b for some word/monomial w (left trivial-unit multiples
// only). Complete for this relation: if b = +-w*a then w maps min supp(a)
// into supp(b), so all candidates are enumerated.
template <class G>
bool equal_up_to_trivial_unit(const GroupRing<G>& a, const GroupRing<G>& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero input");
  if (a.num_terms() != b.num_terms()) return false;
  const G& v = a.terms().begin()->first;
  for (const auto& [u, cu] : b.terms()) {
    G w = u * v.inverse();
    GroupRing<G> wa = a.left_mul(w);
    if (wa == b) return true;
    if (-wa == b) return true;
  }
  return false;
}

}  // namespace l2t
