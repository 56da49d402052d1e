#pragma once

#include <optional>
#include <vector>

#include "l2t/complex.hpp"
#include "l2t/groupring.hpp"
#include "l2t/laurent.hpp"
#include "l2t/leading.hpp"
#include "l2t/matrix.hpp"
#include "l2t/word.hpp"

namespace l2t {

// Finite-index normal subgroup L of F_rank presented by the right coset
// action of the generators on {1..degree}. Validity requires a transitive
// action whose image group has order exactly degree (equivalently, the point
// stabilizer is the kernel, i.e. L is normal).
struct FiniteQuotientSpec {
  int rank = 0;
  int degree = 0;
  std::vector<std::vector<int>> perms;  // one-indexed images, perms[g][i-1] = i . x_{g+1}
};

struct SchreierData {
  FiniteQuotientSpec spec;
  std::vector<Word> transversal;       // g_1 = identity, prefix-closed
  std::vector<Word> basis;             // Schreier generators as words in F
  std::vector<std::vector<int>> edge_to_basis;  // [coset-1][gen-1] -> basis index or -1 (tree)
  int subgroup_rank() const { return static_cast<int>(basis.size()); }

  int coset_of(int coset, int gen, int sign) const;  // one-indexed coset walk
  int coset_of_word(int coset, const Word& w) const;
};

// Builds the coset table along a BFS spanning tree; tree_variant permutes
// the generator scan order, yielding a different tree/section for the
// section-independence tests.
SchreierData coset_table(const FiniteQuotientSpec& spec, int tree_variant = 0);

// Expression of w in the Schreier basis (a word over rank d(m-1)+1).
// Throws std::domain_error if w is not in L.
Word rewrite(const Word& w, const SchreierData& data);

// Inverse of rewrite: expands a word over the Schreier basis back to F.
Word expand(const Word& w_in_basis, const SchreierData& data);

// The degree x degree matrix over Z L with (k,j) entry the coordinate of
// g_k * z in the decomposition (+) Z L * g_j, rewritten over the basis.
Mat<GroupRingElt> lambda_matrix(const GroupRingElt& z, const SchreierData& data);

// Blockwise lambda of a matrix over Z F: shape (rows*d) x (cols*d) over Z L.
Mat<GroupRingElt> lambda_matrix(const Mat<GroupRingElt>& m, const SchreierData& data);

// Abelianized determinant of lambda_matrix(z) over Z[H_1(L)]; the computable
// shadow of the restriction of z. nullopt when the abelianized matrix is
// singular (a certificate-level failure, not a disproof).
std::optional<Laurent> res_invariants(const GroupRingElt& z, const SchreierData& data);

// Restriction of a character on F to the Schreier basis of L.
Character restrict_character(const Character& phi, const SchreierData& data);

// Verifies L_{phi|L}(res z) = res(L_phi z) at the abelianized level, up to
// +-monomial. nullopt when either side's invariant is unavailable.
std::optional<bool> check_res_leading_commute(const GroupRingElt& z, const Character& phi,
                                              const SchreierData& data);

// Factorwise restriction of a torsion value: product of abelianized
// determinants of the lambda blocks with the factor exponents.
std::optional<LaurentFraction> res_torsion(const TorsionValue<Word>& t, const SchreierData& data);

}  // namespace l2t
