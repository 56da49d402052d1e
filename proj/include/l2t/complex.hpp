#pragma once

#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "l2t/groupring.hpp"
#include "l2t/hom.hpp"
#include "l2t/intlinalg.hpp"
#include "l2t/laurent.hpp"
#include "l2t/leading.hpp"
#include "l2t/matrix.hpp"
#include "l2t/polytope.hpp"

namespace l2t {

template <class G>
Mat<Laurent> abelianize_matrix(const Mat<GroupRing<G>>& m) {
  Mat<Laurent> r(m.rows(), m.cols(), m.rank());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = abelianize(m.at(i, j));
  return r;
}

// Finite based free chain complex over the group ring of G. Boundaries are
// stored top degree first: boundaries[k] is the matrix of
// d_{n-k} : C_{n-k} -> C_{n-k-1} with rows indexing the domain basis, so the
// chain condition reads A_i * A_{i-1} = 0.
template <class G>
struct BasedComplex {
  int rank = 0;
  std::vector<int> dims;                     // d_n, ..., d_0
  std::vector<Mat<GroupRing<G>>> boundaries; // A_n, ..., A_1

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int degree) const { return dims[static_cast<std::size_t>(top_degree() - degree)]; }
  const Mat<GroupRing<G>>& boundary(int degree) const {
    return boundaries[static_cast<std::size_t>(top_degree() - degree)];
  }
  Mat<GroupRing<G>>& boundary(int degree) {
    return boundaries[static_cast<std::size_t>(top_degree() - degree)];
  }
};

struct ValidationError {
  int degree = 0;
  std::string message;
};

template <class G>
std::optional<ValidationError> validate(const BasedComplex<G>& c) {
  int n = c.top_degree();
  if (n < 0) return ValidationError{0, "complex has no chain modules"};
  if (static_cast<int>(c.boundaries.size()) != n)
    return ValidationError{0, "boundary count does not match dimensions"};
  for (int i = n; i >= 1; --i) {
    const auto& a = c.boundary(i);
    if (a.rows() != c.dim(i) || a.cols() != c.dim(i - 1))
      return ValidationError{i, "boundary shape mismatch"};
    if (a.rank() != c.rank) return ValidationError{i, "boundary rank mismatch"};
  }
  for (int i = n; i >= 2; --i) {
    if (!(c.boundary(i) * c.boundary(i - 1)).is_zero())
      return ValidationError{i, "d^2 != 0"};
  }
  return std::nullopt;
}

// Degree reindexing k -> n-k with involution-transposed boundaries.
template <class G>
BasedComplex<G> dualize(const BasedComplex<G>& c) {
  if (auto err = validate(c)) throw std::invalid_argument("dualize: invalid complex: " + err->message);
  BasedComplex<G> d;
  d.rank = c.rank;
  d.dims.assign(c.dims.rbegin(), c.dims.rend());
  for (auto it = c.boundaries.rbegin(); it != c.boundaries.rend(); ++it)
    d.boundaries.push_back(it->involute_transpose());
  return d;
}

template <class G>
BasedComplex<G> leading_complex(const Character& phi, const BasedComplex<G>& c) {
  if (auto err = validate(c))
    throw std::invalid_argument("leading_complex: invalid complex: " + err->message);
  BasedComplex<G> l = c;
  for (auto& b : l.boundaries) b = leading_matrix(phi, b);
  return l;
}

// Matrix chain: per-degree column index sets I_n = {} , I_{n-1}, ..., I_0
// (0-based), together with the associated square submatrices
// B_i = A_i[rows not in I_i, cols in I_{i-1}].
template <class G>
struct MatrixChain {
  std::vector<std::vector<int>> index_sets;    // I_n, ..., I_0
  std::vector<Mat<GroupRing<G>>> associated;   // B_n, ..., B_1
};

// Certified-invertibility callback; true means "certified invertible over
// the skew field". Incomplete oracles cause search failure, never wrong
// chains.
template <class G>
using InvertOracle = std::function<bool(const Mat<GroupRing<G>>&)>;

struct ChainBudget {
  int per_degree_oracle_calls = 2000;
};

namespace detail {

// First candidate: pivot columns of a fraction-free elimination on the
// abelianized rows. When the abelianized rows have full rank this subset has
// nonzero Laurent determinant, so a sound certificate fires immediately.
inline std::optional<std::vector<int>> abelian_guided_columns(Mat<Laurent> m, int need) {
  std::vector<int> picked;
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
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * pivot - m.at(r, j) * lead;
    }
    picked.push_back(c);
    ++r;
  }
  if (static_cast<int>(picked.size()) != need) return std::nullopt;
  return picked;
}

inline bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - (k - i)) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

template <class G>
bool chain_search_rec(const BasedComplex<G>& c, const InvertOracle<G>& oracle,
                      const ChainBudget& budget, int degree,
                      std::vector<int> excluded_rows, MatrixChain<G>& out,
                      std::vector<int>& calls) {
  int n = c.top_degree();
  if (degree == 0) {
    out.index_sets.push_back({});  // placeholder; filled by caller chain
    return true;
  }
  const auto& a = c.boundary(degree);
  std::vector<int> rows;
  for (int i = 0; i < a.rows(); ++i)
    if (std::find(excluded_rows.begin(), excluded_rows.end(), i) == excluded_rows.end())
      rows.push_back(i);
  int need = static_cast<int>(rows.size());
  int ncols = a.cols();
  if (need > ncols) return false;

  auto try_subset = [&](const std::vector<int>& cols) -> bool {
    Mat<GroupRing<G>> b = a.submatrix(rows, cols);
    bool ok = true;
    if (need > 0) {
      if (calls[static_cast<std::size_t>(n - degree)] >= budget.per_degree_oracle_calls) return false;
      ++calls[static_cast<std::size_t>(n - degree)];
      ok = oracle(b);
    }
    if (!ok) return false;
    if (chain_search_rec(c, oracle, budget, degree - 1, cols, out, calls)) {
      out.index_sets.push_back(cols);
      out.associated.push_back(std::move(b));
      return true;
    }
    return false;
  };

  if (need == 0) {
    // empty B_i; nothing excluded at the next level
    return try_subset({});
  }
  std::set<std::vector<int>> tried;
  if (auto guided = abelian_guided_columns(abelianize_matrix(a.submatrix(rows, [&] {
        std::vector<int> all;
        for (int j = 0; j < ncols; ++j) all.push_back(j);
        return all;
      }())), need)) {
    if (try_subset(*guided)) return true;
    tried.insert(*guided);
  }
  std::vector<int> cols;
  for (int j = 0; j < need; ++j) cols.push_back(j);
  while (true) {
    if (calls[static_cast<std::size_t>(n - degree)] >= budget.per_degree_oracle_calls) return false;
    if (!tried.count(cols) && try_subset(cols)) return true;
    if (!next_combination(cols, ncols)) return false;
  }
}

}  // namespace detail

template <class G>
std::optional<MatrixChain<G>> matrix_chain_search(const BasedComplex<G>& c,
                                                  const InvertOracle<G>& oracle,
                                                  const ChainBudget& budget = {}) {
  if (auto err = validate(c))
    throw std::invalid_argument("matrix_chain_search: invalid complex: " + err->message);
  int n = c.top_degree();
  MatrixChain<G> chain;
  std::vector<int> calls(static_cast<std::size_t>(n + 1), 0);
  if (!detail::chain_search_rec(c, oracle, budget, n, {}, chain, calls)) return std::nullopt;
  // Recursion appended bottom-up; flip to the documented top-down order and
  // prepend the empty I_n.
  std::reverse(chain.index_sets.begin(), chain.index_sets.end());
  std::reverse(chain.associated.begin(), chain.associated.end());
  chain.index_sets.insert(chain.index_sets.begin(), {});
  return chain;
}

// --- unit-pivot Dieudonne reduction ----------------------------------------

// Result of reducing a square matrix by trivial-unit pivots: the Dieudonne
// determinant class is [sign * word * value].
template <class G>
struct UnitReduction {
  int sign = 1;
  G word;
  GroupRing<G> value;

  GroupRing<G> as_element() const {
    return GroupRing<G>::term(word, sign) * value;
  }
};

template <class G>
std::optional<UnitReduction<G>> unit_pivot_reduce(const Mat<GroupRing<G>>& input,
                                                  std::mt19937_64* shuffle = nullptr) {
  if (!input.is_square()) throw std::invalid_argument("unit_pivot_reduce: non-square matrix");
  Mat<GroupRing<G>> m = input;
  const int n0 = m.rows();
  std::vector<int> rows, cols;
  for (int i = 0; i < n0; ++i) rows.push_back(i), cols.push_back(i);
  UnitReduction<G> acc;
  acc.sign = 1;
  acc.word = G::identity(m.rank());
  while (rows.size() > 1) {
    // candidate pivots: entries that are trivial units
    struct Cand { std::size_t ri, ci; long score; };
    std::vector<Cand> cands;
    for (std::size_t ri = 0; ri < rows.size(); ++ri)
      for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const auto& e = m.at(rows[ri], cols[ci]);
        if (!e.as_trivial_unit()) continue;
        long rn = 0, cn = 0;
        for (std::size_t k = 0; k < cols.size(); ++k)
          if (!m.at(rows[ri], cols[k]).is_zero()) ++rn;
        for (std::size_t k = 0; k < rows.size(); ++k)
          if (!m.at(rows[k], cols[ci]).is_zero()) ++cn;
        cands.push_back({ri, ci, (rn - 1) * (cn - 1)});
      }
    if (cands.empty()) return std::nullopt;
    std::size_t pick = 0;
    if (shuffle) {
      pick = (*shuffle)() % cands.size();
    } else {
      for (std::size_t k = 1; k < cands.size(); ++k)
        if (cands[k].score < cands[pick].score) pick = k;
    }
    std::size_t ri = cands[pick].ri, ci = cands[pick].ci;
    int prow = rows[ri], pcol = cols[ci];
    auto unit = m.at(prow, pcol).as_trivial_unit();
    // clear the pivot column by left row operations
    GroupRing<G> pivot_inv = GroupRing<G>::term(unit->second.inverse(), unit->first);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k] == prow) continue;
      const auto& e = m.at(rows[k], pcol);
      if (e.is_zero()) continue;
      GroupRing<G> f = e * pivot_inv;
      for (std::size_t j = 0; j < cols.size(); ++j)
        m.at(rows[k], cols[j]) = m.at(rows[k], cols[j]) - f * m.at(prow, cols[j]);
    }
    // moving the pivot to the last active row/column costs one sign per swap
    int swaps = static_cast<int>(rows.size() - 1 - ri) + static_cast<int>(cols.size() - 1 - ci);
    if (swaps % 2 == 1) acc.sign = -acc.sign;
    acc.sign *= unit->first;
    acc.word = acc.word * unit->second;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(ri));
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(ci));
  }
  if (rows.empty()) {
    acc.value = GroupRing<G>::one(m.rank());
  } else {
    acc.value = m.at(rows[0], cols[0]);
  }
  return acc;
}

// --- torsion values ---------------------------------------------------------

template <class G>
struct TorsionFactor {
  Mat<GroupRing<G>> matrix;
  int exponent = 1;  // +1 or -1
};

// Zero, or a formal alternating product of certified-invertible matrices
// with computable invariants attached.
template <class G>
struct TorsionValue {
  bool zero = true;
  std::vector<TorsionFactor<G>> factors;

  // invariant bundle (each present when computable)
  std::optional<LaurentFraction> abelian_det;
  std::optional<GroupRing<G>> reduced_plus;   // product of +1 factor reductions
  std::optional<GroupRing<G>> reduced_minus;  // product of -1 factor reductions
  std::optional<GroupRing<G>> element_rep;    // single-element representative
  std::optional<PolytopeDiff> polytope;

  bool is_trivial_unit_class() const {
    return !zero && element_rep && element_rep->as_trivial_unit().has_value();
  }
};

template <class G>
void fill_invariants(TorsionValue<G>& t, int rank) {
  // abelianized determinant
  LaurentFraction det = LaurentFraction::one(rank);
  bool have_det = true;
  for (const auto& f : t.factors) {
    Laurent d = laurent_det(abelianize_matrix(f.matrix));
    if (d.is_zero()) {
      have_det = false;
      break;
    }
    LaurentFraction fd = LaurentFraction::of(d);
    det = det * (f.exponent > 0 ? fd : fd.inverse());
  }
  if (have_det) t.abelian_det = det;

  // unit-pivot reductions
  GroupRing<G> plus = GroupRing<G>::one(rank), minus = GroupRing<G>::one(rank);
  bool reduced = true;
  for (const auto& f : t.factors) {
    auto r = unit_pivot_reduce(f.matrix);
    if (!r || r->value.is_zero()) {
      reduced = false;
      break;
    }
    if (f.exponent > 0)
      plus = plus * r->as_element();
    else
      minus = minus * r->as_element();
  }
  if (!reduced) return;
  t.reduced_plus = plus;
  t.reduced_minus = minus;
  t.polytope = PolytopeDiff(poly_of_elt(plus), poly_of_elt(minus));
  if (auto u = minus.as_trivial_unit())
    t.element_rep = plus.left_mul(u->second.inverse()) * Int(u->first);
}

template <class G>
TorsionValue<G> torsion(const BasedComplex<G>& c, const InvertOracle<G>& oracle,
                        const ChainBudget& budget = {}) {
  auto chain = matrix_chain_search(c, oracle, budget);
  TorsionValue<G> t;
  if (!chain) return t;
  t.zero = false;
  int n = c.top_degree();
  for (int i = n; i >= 1; --i) {
    const auto& b = chain->associated[static_cast<std::size_t>(n - i)];
    if (b.rows() == 0) continue;
    t.factors.push_back({b, i % 2 == 0 ? 1 : -1});
  }
  fill_invariants(t, c.rank);
  return t;
}

// Exact oracle for complexes over Z[Z^k]: a square Laurent matrix is
// invertible over the fraction field iff its determinant is nonzero.
inline InvertOracle<Monomial> exact_laurent_oracle() {
  return [](const Mat<Laurent>& m) { return !laurent_det(m).is_zero(); };
}

// --- word conjugacy and Wh-level element comparison -------------------------

// w = c * r * c^-1 with r cyclically reduced; returns (c, r).
inline std::pair<Word, Word> cyclic_reduce(const Word& w) {
  auto letters = w.letters();
  std::size_t i = 0, j = letters.size();
  while (j - i >= 2 && letters[i].gen == letters[j - 1].gen &&
         letters[i].sign == -letters[j - 1].sign) {
    ++i;
    --j;
  }
  std::vector<Letter> conj(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<Letter> core(letters.begin() + static_cast<std::ptrdiff_t>(i),
                           letters.begin() + static_cast<std::ptrdiff_t>(j));
  return {Word::from_letters(w.rank(), conj), Word::from_letters(w.rank(), core)};
}

// All g with u = g v g^-1 arising from cyclic rotations (empty if u and v
// are not conjugate).
inline std::vector<Word> conjugators(const Word& u, const Word& v) {
  auto [cu, ru] = cyclic_reduce(u);
  auto [cv, rv] = cyclic_reduce(v);
  std::vector<Word> out;
  if (ru.length() != rv.length()) return out;
  if (ru.is_identity()) {
    if (u == v) out.push_back(Word::identity(u.rank()));
    return out;
  }
  auto rl = rv.letters();
  for (std::size_t s = 0; s < rl.size(); ++s) {
    std::vector<Letter> rot(rl.begin() + static_cast<std::ptrdiff_t>(s), rl.end());
    rot.insert(rot.end(), rl.begin(), rl.begin() + static_cast<std::ptrdiff_t>(s));
    if (Word::from_letters(u.rank(), rot) == ru) {
      std::vector<Letter> pre(rl.begin(), rl.begin() + static_cast<std::ptrdiff_t>(s));
      Word p = Word::from_letters(u.rank(), pre);
      out.push_back(cu * p.inverse() * cv.inverse());
    }
  }
  return out;
}

// Sound (not complete) Wh-level equality for single ring elements: searches
// words g, h with b = +- g * a * h among quotient and conjugator candidates
// drawn from the supports.
inline bool wh_element_equal(const GroupRingElt& a, const GroupRingElt& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("zero input");
  if (a.num_terms() != b.num_terms()) return false;
  constexpr std::size_t kCap = 64;
  std::set<Word> gs, hs;
  gs.insert(Word::identity(a.rank()));
  hs.insert(Word::identity(a.rank()));
  for (const auto& [u, cu] : b.terms())
    for (const auto& [v, cv] : a.terms()) {
      if (gs.size() < kCap) gs.insert(u * v.inverse());
      if (hs.size() < kCap) hs.insert(v.inverse() * u);
      for (const auto& g : conjugators(u, v))
        if (gs.size() < kCap) gs.insert(g);
    }
  for (const Word& g : gs) {
    GroupRingElt ga = a.left_mul(g);
    GroupRingElt gag = ga.right_mul(g.inverse());
    if (gag == b || -gag == b) return true;
    for (const Word& h : hs) {
      GroupRingElt gah = ga.right_mul(h);
      if (gah == b || -gah == b) return true;
    }
  }
  return false;
}

// --- complexes from homomorphisms and presentations -------------------------

// 0 -> ZF^n --J_phi--> ZF^m -> 0 -> 0 in degrees 2, 1, 0.
inline BasedComplex<Word> mapping_cylinder_complex(const FreeHom& phi) {
  BasedComplex<Word> c;
  c.rank = phi.codomain_rank;
  c.dims = {phi.domain_rank, phi.codomain_rank, 0};
  c.boundaries.push_back(fox_jacobian(phi));
  c.boundaries.emplace_back(phi.codomain_rank, 0, phi.codomain_rank);
  return c;
}

// Fox-calculus presentation complex over the ambient free-group ring:
// 0 -> (ZF)^r -> (ZF)^m -> ZF -> 0. The chain condition d^2 = 0 holds only
// through quotients killing the relators, so this complex is consumed via
// presentation_abelian_complex below.
inline BasedComplex<Word> presentation_complex(int generators, const std::vector<Word>& relators) {
  for (const auto& r : relators) {
    if (r.rank() != generators) throw std::invalid_argument("relator rank mismatch");
    if (r.is_identity()) throw std::invalid_argument("empty relator");
  }
  BasedComplex<Word> c;
  c.rank = generators;
  int r = static_cast<int>(relators.size());
  c.dims = {r, generators, 1};
  Mat<GroupRingElt> a2(r, generators, generators);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < generators; ++j)
      a2.at(i, j) = fox_derivative(relators[static_cast<std::size_t>(i)], j + 1);
  Mat<GroupRingElt> a1(generators, 1, generators);
  for (int j = 0; j < generators; ++j) {
    a1.at(j, 0) = GroupRingElt::term(Word::gen_pow(generators, j + 1, 1), 1) - GroupRingElt::one(generators);
  }
  c.boundaries.push_back(std::move(a2));
  c.boundaries.push_back(std::move(a1));
  return c;
}

// The presentation complex pushed to the free part of the presented group's
// abelianization (computed from the relator exponent matrix by Smith
// reduction). This is a genuine chain complex over a Laurent ring.
inline BasedComplex<Monomial> presentation_abelian_complex(int generators,
                                                           const std::vector<Word>& relators) {
  BasedComplex<Word> c = presentation_complex(generators, relators);
  IntMat rel;
  for (const auto& r : relators) {
    auto v = r.abelian();
    rel.emplace_back(v.begin(), v.end());
  }
  SmithQuotient q = smith_quotient(rel, generators);
  auto push_word = [&](const Word& w) {
    auto img = q.map(w.abelian());
    std::vector<std::int64_t> e;
    e.reserve(img.size());
    for (const auto& x : img) e.push_back(static_cast<std::int64_t>(x));
    return Monomial(e);
  };
  BasedComplex<Monomial> out;
  out.rank = q.free_rank;
  out.dims = c.dims;
  for (const auto& b : c.boundaries) {
    Mat<Laurent> m(b.rows(), b.cols(), q.free_rank);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) {
        Laurent e(q.free_rank);
        for (const auto& [w, coeff] : b.at(i, j).terms()) e.add_term(push_word(w), coeff);
        m.at(i, j) = e;
      }
    out.boundaries.push_back(std::move(m));
  }
  return out;
}

}  // namespace l2t
