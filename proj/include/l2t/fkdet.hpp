#pragma once

#include <cstdint>
#include <vector>

#include "l2t/complex.hpp"
#include "l2t/groupring.hpp"
#include "l2t/matrix.hpp"

namespace l2t {

// Numerical Fuglede-Kadison determinant estimate from the random
// permutation-matrix model. Reproducible from (N, trials, seed).
struct FKEstimate {
  double estimate = 0.0;  // geometric mean exp(mean of per-trial log-det/N)
  double stderr_ = 0.0;
  int matrix_size = 0;
  int trials = 0;
  int discarded = 0;
  std::uint64_t seed = 0;
};

struct FKFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per trial: independent uniform permutation matrices per generator, exact
// assembly of the evaluated operator, partial-pivot LU in doubles, singular
// trials discarded and counted. Throws FKFailure if more than half of the
// trials are discarded. The parallel version distributes trials over OpenMP
// threads; per-trial sub-seeds make it bit-identical to the serial one.
FKEstimate estimate_fk(const GroupRingElt& a, int n, int trials, std::uint64_t seed);
FKEstimate estimate_fk_serial(const GroupRingElt& a, int n, int trials, std::uint64_t seed);

// Matrix version: evaluates a k x k matrix over the group ring to a
// (k*N) x (k*N) operator per trial.
FKEstimate estimate_fk_matrix(const Mat<GroupRingElt>& m, int n, int trials, std::uint64_t seed);

// Factorwise estimate for a torsion value, multiplying per-factor estimates
// with the exponent signs; uses the element representative when present.
FKEstimate fk_of_torsion(const TorsionValue<Word>& t, int n, int trials, std::uint64_t seed);

}  // namespace l2t
