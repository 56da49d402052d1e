#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "l2t/groupring.hpp"
#include "l2t/matrix.hpp"

namespace l2t {

// --- Laurent polynomial helpers -------------------------------------------
//
// Laurent = GroupRing<Monomial> from groupring.hpp. The operations below use
// commutativity; they have no free-group counterpart.

// Componentwise minimum of the support exponents. Precondition: a != 0.
inline std::vector<std::int64_t> min_exponents(const Laurent& a) {
  if (a.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<std::int64_t> m = a.terms().begin()->first.exps();
  for (const auto& [g, c] : a.terms())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], g.exps()[i]);
  return m;
}

inline Int content(const Laurent& a) {
  Int g = 0;
  for (const auto& [m, c] : a.terms()) g = int_gcd(g, c);
  return g;
}

// Shift by a monomial so that the componentwise minimal exponent is zero,
// then normalize sign so the first (lex-min) term is positive. Canonical
// representative of the class of a up to +-monomial.
inline Laurent monic_normalize(const Laurent& a) {
  if (a.is_zero()) return a;
  Monomial shift = Monomial(min_exponents(a)).inverse();
  Laurent r = a.left_mul(shift);
  if (r.terms().begin()->second < 0) r = -r;
  return r;
}

inline bool equal_up_to_monomial_sign(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return monic_normalize(a) == monic_normalize(b);
}

// Exact division over Z[t1^-+, ...]. Returns nullopt if b does not divide a.
// Works after shifting both operands into the polynomial ring, where the lex
// order on exponents is a well-order and leading-term descent terminates.
inline std::optional<Laurent> divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero");
  if (a.is_zero()) return a;
  const Monomial sa(min_exponents(a)), sb(min_exponents(b));
  Laurent rem = a.left_mul(sa.inverse());
  const Laurent bb = b.left_mul(sb.inverse());
  Laurent q(a.rank());
  const Monomial bm = bb.terms().rbegin()->first;  // lex-max term of divisor
  const Int bc = bb.terms().rbegin()->second;
  while (!rem.is_zero()) {
    const Monomial rm = rem.terms().rbegin()->first;
    const Int rc = rem.terms().rbegin()->second;
    Monomial qm = rm * bm.inverse();
    for (auto e : qm.exps())
      if (e < 0) return std::nullopt;
    Int c = rc / bc;
    if (c * bc != rc) return std::nullopt;
    Laurent t = Laurent::term(qm, c);
    q = q + t;
    rem = rem - t * bb;
  }
  return q.left_mul(sa * sb.inverse());
}

// Bareiss fraction-free elimination. Works in the polynomial ring; all
// divisions are exact by the Sylvester identity.
inline Laurent laurent_det(Mat<Laurent> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Laurent::one(m.rank());
  // Clear negative exponents: multiplying a row by a monomial scales the
  // determinant by that monomial; track the total shift.
  Monomial shift = Monomial::identity(m.rank());
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> mins(static_cast<std::size_t>(m.rank()), 0);
    for (int j = 0; j < n; ++j)
      if (!m.at(i, j).is_zero()) {
        auto e = min_exponents(m.at(i, j));
        for (std::size_t k = 0; k < mins.size(); ++k) mins[k] = std::min(mins[k], e[k]);
      }
    Monomial rowshift = Monomial(mins).inverse();
    shift = shift * Monomial(mins);
    for (int j = 0; j < n; ++j) m.at(i, j) = m.at(i, j).left_mul(rowshift);
  }
  int sign = 1;
  Laurent prev = Laurent::one(m.rank());
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n && p < 0; ++i)
        if (!m.at(i, k).is_zero()) p = i;
      if (p < 0) return Laurent::zero(m.rank());
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Laurent num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        auto d = divide_exact(num, prev);
        if (!d) throw std::logic_error("bareiss: non-exact division");
        m.at(i, j) = *d;
      }
      m.at(i, k) = Laurent::zero(m.rank());
    }
    prev = m.at(k, k);
  }
  Laurent det = m.at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det.left_mul(shift);
}

// Rank over the fraction field Q(t1..tk).
inline int laurent_rank(Mat<Laurent> m) {
  int rank = 0;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows() && p < 0; ++i)
      if (!m.at(i, c).is_zero()) p = i;
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(p, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      Laurent pivot = m.at(r, c), lead = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) * pivot - m.at(r, j) * lead;
    }
    ++r;
    ++rank;
  }
  return rank;
}

// --- Laurent fractions ------------------------------------------------------

// Quotient of Laurent polynomials, normalized by integer content, a common
// monomial shift, and denominator sign. No polynomial gcd reduction is
// attempted; equality goes through cross multiplication.
class LaurentFraction {
 public:
  LaurentFraction() = default;
  LaurentFraction(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (num_.rank() != den_.rank()) throw std::invalid_argument("rank mismatch");
    normalize();
  }
  static LaurentFraction of(const Laurent& p) {
    return LaurentFraction(p, Laurent::one(p.rank()));
  }
  static LaurentFraction one(int rank) { return of(Laurent::one(rank)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  int rank() const { return den_.rank(); }
  bool is_zero() const { return num_.is_zero(); }

  LaurentFraction operator*(const LaurentFraction& o) const {
    return LaurentFraction(num_ * o.num_, den_ * o.den_);
  }
  LaurentFraction operator+(const LaurentFraction& o) const {
    return LaurentFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  LaurentFraction operator-(const LaurentFraction& o) const {
    return LaurentFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  LaurentFraction inverse() const {
    if (num_.is_zero()) throw std::invalid_argument("inverting zero");
    return LaurentFraction(den_, num_);
  }

  // t_i -> t_i^-1 on both parts.
  LaurentFraction involute() const {
    return LaurentFraction(num_.involute(), den_.involute());
  }

  bool operator==(const LaurentFraction& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
  }
  bool equal_up_to_sign(const LaurentFraction& o) const {
    Laurent l = num_ * o.den_, r = o.num_ * den_;
    return l == r || l == -r;
  }
  bool equal_up_to_monomial_sign(const LaurentFraction& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return l2t::equal_up_to_monomial_sign(num_ * o.den_, o.num_ * den_);
  }

  std::string str() const {
    std::string s = "(" + num_.str() + ")";
    if (!(den_ == Laurent::one(rank()))) s += " / (" + den_.str() + ")";
    return s;
  }

 private:
  Laurent num_, den_;

  void normalize() {
    if (num_.is_zero()) {
      den_ = Laurent::one(den_.rank());
      return;
    }
    Int g = int_gcd(content(num_), content(den_));
    if (g > 1) {
      Laurent n(num_.rank()), d(den_.rank());
      for (const auto& [m, c] : num_.terms()) n.add_term(m, c / g);
      for (const auto& [m, c] : den_.terms()) d.add_term(m, c / g);
      num_ = n;
      den_ = d;
    }
    auto en = min_exponents(num_), ed = min_exponents(den_);
    std::vector<std::int64_t> common(en.size());
    for (std::size_t i = 0; i < en.size(); ++i) common[i] = std::min(en[i], ed[i]);
    Monomial shift = Monomial(common).inverse();
    num_ = num_.left_mul(shift);
    den_ = den_.left_mul(shift);
    if (den_.terms().begin()->second < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }
};

}  // namespace l2t
