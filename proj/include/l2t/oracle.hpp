#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "l2t/complex.hpp"
#include "l2t/groupring.hpp"
#include "l2t/intlinalg.hpp"
#include "l2t/matrix.hpp"

namespace l2t {
namespace oracle {

// Reproducible certificates of invertibility over the skew field D(F).
struct AbelianDetCert {};
struct RandomSubstitutionCert {
  int size = 0;
  std::uint64_t seed = 0;
};
struct CertifiedInvertible {
  std::variant<AbelianDetCert, RandomSubstitutionCert> certificate;
};

enum class SingularReason { non_square, zero_row_or_column, exact_hom_decision };
struct CertifiedSingular {
  SingularReason reason;
};

struct Undecided {
  std::vector<int> sizes_tried;
};

struct InvertVerdict {
  std::variant<CertifiedInvertible, CertifiedSingular, Undecided> v;

  bool invertible() const { return std::holds_alternative<CertifiedInvertible>(v); }
  bool singular() const { return std::holds_alternative<CertifiedSingular>(v); }
  bool undecided() const { return std::holds_alternative<Undecided>(v); }
};

struct Budget {
  int max_size = 8;        // random substitution dimension cap (powers of two)
  int seeds_per_size = 3;
  std::uint64_t base_seed = 0x5eed;
};

// Fires iff det(abelianize(M)) != 0; sound because a non-full matrix over ZF
// factors through smaller rank over the ring itself.
std::optional<CertifiedInvertible> abelian_cert(const Mat<GroupRingElt>& m);

// Substitutes each generator by a random unimodular d x d integer matrix and
// checks full rank of the (n*d) x (n*d) evaluation, exactly.
std::optional<CertifiedInvertible> random_matrix_cert(const Mat<GroupRingElt>& m, int size,
                                                      std::uint64_t seed);

// Escalation: structural checks, abelian certificate, then random
// substitutions at sizes 1, 2, 4, ..., max_size. Deterministic for a fixed
// budget.
InvertVerdict certify(const Mat<GroupRingElt>& m, const Budget& budget = {});

// InvertOracle adapter for the matrix-chain search.
InvertOracle<Word> certified_oracle(const Budget& budget = {});

}  // namespace oracle
}  // namespace l2t
