#include "l2t/fkdet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace l2t {

namespace {

constexpr double kSingularPivot = 1e-12;

using Permutation = std::vector<int>;

Permutation random_permutation(int n, std::mt19937_64& rng) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(d(rng))]);
  }
  return p;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

// Permutation of the word under the substitution (composition of generator
// permutations along the letters).
Permutation word_permutation(const Word& w, const std::vector<Permutation>& gens,
                             const std::vector<Permutation>& invs, int n) {
  Permutation acc(static_cast<std::size_t>(n));
  std::iota(acc.begin(), acc.end(), 0);
  for (const auto& l : w.letters()) {
    const Permutation& step =
        l.sign > 0 ? gens[static_cast<std::size_t>(l.gen - 1)] : invs[static_cast<std::size_t>(l.gen - 1)];
    for (auto& x : acc) x = step[static_cast<std::size_t>(x)];
  }
  return acc;
}

// log|det| by partial-pivot LU; NaN marks a singular trial.
double log_abs_det(std::vector<double>& a, int n) {
  double logdet = 0.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = std::fabs(a[static_cast<std::size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      double v = std::fabs(a[static_cast<std::size_t>(i) * n + k]);
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best < kSingularPivot) return std::nan("");
    if (p != k)
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(p) * n + j], a[static_cast<std::size_t>(k) * n + j]);
    double piv = a[static_cast<std::size_t>(k) * n + k];
    logdet += std::log(std::fabs(piv));
    for (int i = k + 1; i < n; ++i) {
      double f = a[static_cast<std::size_t>(i) * n + k] / piv;
      if (f == 0.0) continue;
      for (int j = k + 1; j < n; ++j)
        a[static_cast<std::size_t>(i) * n + j] -= f * a[static_cast<std::size_t>(k) * n + j];
      a[static_cast<std::size_t>(i) * n + k] = 0.0;
    }
  }
  return logdet;
}

// One trial of the permutation model for a k x k matrix over the group ring:
// returns log|det| / N, or NaN for a discarded trial.
double matrix_trial(const Mat<GroupRingElt>& m, int n, std::uint64_t trial_seed) {
  std::mt19937_64 rng(trial_seed);
  std::vector<Permutation> gens, invs;
  for (int g = 0; g < m.rank(); ++g) {
    gens.push_back(random_permutation(n, rng));
    invs.push_back(inverse_permutation(gens.back()));
  }
  const int k = m.rows();
  const int big = k * n;
  std::vector<double> a(static_cast<std::size_t>(big) * static_cast<std::size_t>(big), 0.0);
  for (int bi = 0; bi < k; ++bi)
    for (int bj = 0; bj < k; ++bj)
      for (const auto& [w, c] : m.at(bi, bj).terms()) {
        Permutation p = word_permutation(w, gens, invs, n);
        double cd = static_cast<double>(c);
        for (int i = 0; i < n; ++i) {
          int row = bi * n + i;
          int col = bj * n + p[static_cast<std::size_t>(i)];
          a[static_cast<std::size_t>(row) * big + col] += cd;
        }
      }
  double ld = log_abs_det(a, big);
  return std::isnan(ld) ? ld : ld / n;
}

FKEstimate aggregate(const std::vector<double>& values, int n, int trials, std::uint64_t seed) {
  std::vector<double> ok;
  for (double v : values)
    if (!std::isnan(v)) ok.push_back(v);
  FKEstimate e;
  e.matrix_size = n;
  e.trials = trials;
  e.discarded = trials - static_cast<int>(ok.size());
  e.seed = seed;
  if (ok.empty() || e.discarded * 2 > trials)
    throw FKFailure("estimation failure: " + std::to_string(e.discarded) + "/" +
                    std::to_string(trials) + " trials singular");
  double mean = std::accumulate(ok.begin(), ok.end(), 0.0) / static_cast<double>(ok.size());
  double var = 0.0;
  for (double v : ok) var += (v - mean) * (v - mean);
  if (ok.size() > 1) var /= static_cast<double>(ok.size() - 1);
  double se_log = ok.size() > 1 ? std::sqrt(var / static_cast<double>(ok.size())) : 0.0;
  e.estimate = std::exp(mean);
  e.stderr_ = e.estimate * se_log;
  return e;
}

void check_args(const GroupRingElt& a, int n) {
  if (a.is_zero()) throw std::invalid_argument("estimate of zero element");
  if (n < 16) throw std::invalid_argument("matrix size must be >= 16");
}

Mat<GroupRingElt> as_matrix(const GroupRingElt& a) {
  Mat<GroupRingElt> m(1, 1, a.rank());
  m.at(0, 0) = a;
  return m;
}

}  // namespace

FKEstimate estimate_fk_serial(const GroupRingElt& a, int n, int trials, std::uint64_t seed) {
  check_args(a, n);
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Mat<GroupRingElt> m = as_matrix(a);
  std::vector<double> values(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t)
    values[static_cast<std::size_t>(t)] = matrix_trial(m, n, split_seed(seed, static_cast<std::uint64_t>(t)));
  return aggregate(values, n, trials, seed);
}

FKEstimate estimate_fk_matrix(const Mat<GroupRingElt>& m, int n, int trials, std::uint64_t seed) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("square nonzero matrix required");
  if (n < 16) throw std::invalid_argument("matrix size must be >= 16");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t)
    values[static_cast<std::size_t>(t)] = matrix_trial(m, n, split_seed(seed, static_cast<std::uint64_t>(t)));
  return aggregate(values, n, trials, seed);
}

FKEstimate estimate_fk(const GroupRingElt& a, int n, int trials, std::uint64_t seed) {
  check_args(a, n);
  return estimate_fk_matrix(as_matrix(a), n, trials, seed);
}

FKEstimate fk_of_torsion(const TorsionValue<Word>& t, int n, int trials, std::uint64_t seed) {
  if (t.zero) throw std::invalid_argument("fk determinant of zero torsion");
  if (t.element_rep) {
    if (auto u = t.element_rep->as_trivial_unit()) {
      FKEstimate e;
      e.estimate = 1.0;
      e.stderr_ = 0.0;
      e.matrix_size = n;
      e.trials = trials;
      e.seed = seed;
      return e;
    }
    return estimate_fk(*t.element_rep, n, trials, seed);
  }
  FKEstimate out;
  out.estimate = 1.0;
  out.matrix_size = n;
  out.trials = trials;
  out.seed = seed;
  double rel_var = 0.0;
  std::uint64_t factor_index = 0;
  for (const auto& f : t.factors) {
    FKEstimate e = estimate_fk_matrix(f.matrix, n, trials, split_seed(seed, 0xfac70 + factor_index++));
    out.discarded += e.discarded;
    if (f.exponent > 0)
      out.estimate *= e.estimate;
    else
      out.estimate /= e.estimate;
    double r = e.estimate > 0 ? e.stderr_ / e.estimate : 0.0;
    rel_var += r * r;
  }
  out.stderr_ = out.estimate * std::sqrt(rel_var);
  return out;
}

}  // namespace l2t
