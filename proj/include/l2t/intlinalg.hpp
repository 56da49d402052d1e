#pragma once

#include <vector>

#include "l2t/ints.hpp"

namespace l2t {

// Dense integer matrix helpers used by the certificate and rewriting code.
// All arithmetic is exact.
using IntMat = std::vector<std::vector<Int>>;

inline IntMat int_identity(std::size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat r(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

// Fraction-free Gaussian elimination (Bareiss); returns the rank.
int int_rank(IntMat m);

// Smith normal form data for an integer matrix R (relations as rows in
// Z^cols): a basis map onto the free part of the quotient Z^cols / row(R).
struct SmithQuotient {
  int ambient = 0;   // cols of R
  int free_rank = 0; // rank of the free part of the quotient
  // free_rank x ambient projection; class of e_j is the j-th column.
  IntMat projection;

  std::vector<Int> map(const std::vector<std::int64_t>& v) const;
};

SmithQuotient smith_quotient(const IntMat& relations, int ambient);

}  // namespace l2t
