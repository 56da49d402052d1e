#pragma once

#include <string>

#include "l2t/complex.hpp"
#include "l2t/hom.hpp"
#include "l2t/oracle.hpp"

namespace l2t {

// --- torsion of a homomorphism ----------------------------------------------

struct HomTorsion {
  enum class Status { value, zero, undecided };
  Status status = Status::zero;
  TorsionValue<Word> torsion;  // meaningful when status == value
  std::string decided_by;      // "exact-hom-decision" or "certificate"
};

// Exact pipeline: rank check and the Stallings weak-isomorphism decision;
// when that is decided the Fox Jacobian is the whole matrix chain. Falls
// back to certificates when the compressedness enumeration exceeds the cap.
HomTorsion torsion_of_hom(const FreeHom& phi, const oracle::Budget& budget = {},
                          int vertex_cap = 12);

// --- example catalog ---------------------------------------------------------

// Seifert-surface inclusion of the n-chain link complement: u_i -> x_i
// x_{i+1}^-1 for i < n-1 and u_{n-1} -> x_{n-1}^2 x_{n-2} ... x_2 x_1.
FreeHom chainlink_hom(int n);

// The n-chain normalization basis y_i = x_{n-1} x_{n-2} ... x_i as words of
// F_{n-1}, and the torsion representative 1 + y_1 + ... + y_{n-1}.
Word chainlink_y(int n, int i);
GroupRingElt chainlink_sum(int n);

// Genus-2 sutured handlebody: x -> x, u -> y x y x^-1 y^-1.
FreeHom genus2_hom();
GroupRingElt genus2_expected_rep();  // 1 + yx - u

// Trefoil group presentation <a, b | a b a b^-1 a^-1 b^-1>.
std::vector<Word> trefoil_relators();

// Circle chain complex 0 -> ZF_1 --(x-1)--> ZF_1 -> 0.
BasedComplex<Word> circle_complex();

// Torus chain complex over Z[t1, t2]^+- (the fundamental group is abelian,
// so this lives in the Laurent instantiation).
BasedComplex<Monomial> torus_complex();

}  // namespace l2t
