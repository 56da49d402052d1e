#include "l2t/oracle.hpp"

#include <random>

#include "l2t/laurent.hpp"

namespace l2t {
namespace oracle {

namespace {

// Random unimodular matrix with tracked inverse: a product of elementary
// shear operations, so evaluation of inverse generators stays exact.
struct Unimodular {
  IntMat m, inv;
};

Unimodular random_unimodular(int d, std::mt19937_64& rng) {
  Unimodular u{int_identity(static_cast<std::size_t>(d)), int_identity(static_cast<std::size_t>(d))};
  if (d == 1) return u;
  std::uniform_int_distribution<int> idx(0, d - 1), cdist(0, 3);
  const int ops = 3 * d;
  for (int t = 0; t < ops; ++t) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    int c = cdist(rng) < 2 ? 1 : -1;
    // row_i += c * row_j on m; inverse gets the opposite shear applied on
    // the right (row_j -= ... composes in reverse): track as m = E * m,
    // inv = inv * E^-1.
    for (int k = 0; k < d; ++k)
      u.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] += c * u.m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    for (int k = 0; k < d; ++k)
      u.inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -= c * u.inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  }
  return u;
}

IntMat evaluate_word(const Word& w, const std::vector<Unimodular>& subs, int d) {
  IntMat acc = int_identity(static_cast<std::size_t>(d));
  for (const auto& [g, e] : w.blocks()) {
    const IntMat& base = e > 0 ? subs[static_cast<std::size_t>(g - 1)].m : subs[static_cast<std::size_t>(g - 1)].inv;
    for (std::int64_t k = 0, n = e < 0 ? -e : e; k < n; ++k) acc = int_mul(acc, base);
  }
  return acc;
}

bool has_zero_line(const Mat<GroupRingElt>& m) {
  for (int i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < m.cols() && zero; ++j)
      if (!m.at(i, j).is_zero()) zero = false;
    if (zero) return true;
  }
  for (int j = 0; j < m.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < m.rows() && zero; ++i)
      if (!m.at(i, j).is_zero()) zero = false;
    if (zero) return true;
  }
  return false;
}

}  // namespace

std::optional<CertifiedInvertible> abelian_cert(const Mat<GroupRingElt>& m) {
  if (!m.is_square()) throw std::invalid_argument("abelian_cert: non-square matrix");
  if (laurent_det(abelianize_matrix(m)).is_zero()) return std::nullopt;
  return CertifiedInvertible{AbelianDetCert{}};
}

std::optional<CertifiedInvertible> random_matrix_cert(const Mat<GroupRingElt>& m, int size,
                                                      std::uint64_t seed) {
  if (!m.is_square()) throw std::invalid_argument("random_matrix_cert: non-square matrix");
  if (size < 1) throw std::invalid_argument("random_matrix_cert: size must be >= 1");
  const int n = m.rows();
  if (n == 0) return CertifiedInvertible{RandomSubstitutionCert{size, seed}};
  std::mt19937_64 rng(seed);
  std::vector<Unimodular> subs;
  subs.reserve(static_cast<std::size_t>(m.rank()));
  for (int g = 0; g < m.rank(); ++g) subs.push_back(random_unimodular(size, rng));
  const int nd = n * size;
  IntMat big(static_cast<std::size_t>(nd), std::vector<Int>(static_cast<std::size_t>(nd), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (const auto& [w, c] : m.at(i, j).terms()) {
        IntMat block = evaluate_word(w, subs, size);
        for (int a = 0; a < size; ++a)
          for (int b = 0; b < size; ++b)
            big[static_cast<std::size_t>(i * size + a)][static_cast<std::size_t>(j * size + b)] +=
                c * block[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
    }
  if (int_rank(std::move(big)) != nd) return std::nullopt;
  return CertifiedInvertible{RandomSubstitutionCert{size, seed}};
}

InvertVerdict certify(const Mat<GroupRingElt>& m, const Budget& budget) {
  if (!m.is_square()) return {CertifiedSingular{SingularReason::non_square}};
  if (m.rows() > 0 && has_zero_line(m)) return {CertifiedSingular{SingularReason::zero_row_or_column}};
  if (auto c = abelian_cert(m)) return {*c};
  Undecided u;
  for (int size = 1; size <= budget.max_size; size *= 2) {
    for (int s = 0; s < budget.seeds_per_size; ++s) {
      std::uint64_t seed = split_seed(budget.base_seed, static_cast<std::uint64_t>(size) * 131 + static_cast<std::uint64_t>(s));
      if (auto c = random_matrix_cert(m, size, seed)) return {*c};
      if (size == 1) break;  // all seeds coincide at size 1
    }
    u.sizes_tried.push_back(size);
  }
  return {u};
}

InvertOracle<Word> certified_oracle(const Budget& budget) {
  return [budget](const Mat<GroupRingElt>& m) { return certify(m, budget).invertible(); };
}

}  // namespace oracle
}  // namespace l2t
