#include "l2t/intlinalg.hpp"

#include <cstdlib>
#include <stdexcept>

namespace l2t {

int int_rank(IntMat m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  Int prev = 1;
  int rank = 0, r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows && p < 0; ++i)
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) p = i;
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(p)]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
             m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) /
            prev;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
    }
    prev = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    ++r;
    ++rank;
  }
  return rank;
}

namespace {

// In-place diagonalization by unimodular row/column operations, tracking the
// column operations in v. The divisibility chain of the full Smith form is
// not needed here; only the diagonal rank and the column basis matter.
int diagonalize(IntMat& a, IntMat& v) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  auto col_sub = [&](int dst, int src, const Int& q) {  // col dst -= q * col src
    for (int i = 0; i < rows; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(dst)] -= q * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(src)];
    for (std::size_t i = 0; i < v.size(); ++i) v[i][static_cast<std::size_t>(dst)] -= q * v[i][static_cast<std::size_t>(src)];
  };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < rows; ++i) std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)], a[static_cast<std::size_t>(i)][static_cast<std::size_t>(y)]);
    for (std::size_t i = 0; i < v.size(); ++i) std::swap(v[i][static_cast<std::size_t>(x)], v[i][static_cast<std::size_t>(y)]);
  };
  int t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of minimal absolute value in the active block
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        const Int& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (x == 0) continue;
        Int ax = x < 0 ? -x : x;
        if (pi < 0 || ax < best) {
          pi = i;
          pj = j;
          best = ax;
        }
      }
    if (pi < 0) break;
    std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
    if (pj != t) col_swap(t, pj);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i) {
      Int q = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] / a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
      if (q != 0)
        for (int j = t; j < cols; ++j)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= q * a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0) clean = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      Int q = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] / a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
      if (q != 0) col_sub(j, t, q);
      if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0) clean = false;
    }
    if (clean) ++t;  // otherwise repeat with a smaller pivot in the block
  }
  return t;  // number of nonzero diagonal entries
}

}  // namespace

std::vector<Int> SmithQuotient::map(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != ambient) throw std::invalid_argument("vector dimension mismatch");
  std::vector<Int> out(static_cast<std::size_t>(free_rank), 0);
  for (int i = 0; i < free_rank; ++i)
    for (int j = 0; j < ambient; ++j)
      out[static_cast<std::size_t>(i)] += Int(v[static_cast<std::size_t>(j)]) * projection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

SmithQuotient smith_quotient(const IntMat& relations, int ambient) {
  for (const auto& row : relations)
    if (static_cast<int>(row.size()) != ambient) throw std::invalid_argument("relation width mismatch");
  IntMat a = relations;
  IntMat v = int_identity(static_cast<std::size_t>(ambient));
  int diag = relations.empty() ? 0 : diagonalize(a, v);
  SmithQuotient q;
  q.ambient = ambient;
  q.free_rank = ambient - diag;
  // y = x * V transforms relations to multiples of the first `diag` basis
  // vectors; the free coordinates are the remaining columns of V.
  q.projection.assign(static_cast<std::size_t>(q.free_rank), std::vector<Int>(static_cast<std::size_t>(ambient), 0));
  for (int i = 0; i < q.free_rank; ++i)
    for (int j = 0; j < ambient; ++j)
      q.projection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)][static_cast<std::size_t>(diag + i)];
  return q;
}

}  // namespace l2t
