#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2t/laurent.hpp"
#include "support/rng.hpp"

using namespace l2t;

namespace {

// Evaluate at a tuple of nonzero rationals; the substitution oracle.
Rat eval(const Laurent& p, const std::vector<Rat>& x) {
  Rat s = 0;
  for (const auto& [m, c] : p.terms()) {
    Rat t(c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::int64_t e = m.exps()[i];
      Rat b = x[i];
      if (e < 0) { b = Rat(denominator(b), numerator(b)); e = -e; }
      for (std::int64_t k = 0; k < e; ++k) t *= b;
    }
    s += t;
  }
  return s;
}

// Cofactor expansion; independent of the Bareiss path.
Laurent cofactor_det(const Mat<Laurent>& m) {
  if (m.rows() == 0) return Laurent::one(m.rank());
  if (m.rows() == 1) return m.at(0, 0);
  Laurent s(m.rank());
  std::vector<int> cols;
  for (int j = 1; j < m.cols(); ++j) cols.push_back(j);
  std::vector<int> rows;
  for (int i = 1; i < m.rows(); ++i) rows.push_back(i);
  for (int j = 0; j < m.cols(); ++j) {
    if (m.at(0, j).is_zero()) continue;
    std::vector<int> sub;
    for (int k = 0; k < m.cols(); ++k)
      if (k != j) sub.push_back(k);
    Laurent minor = cofactor_det(m.submatrix(rows, sub));
    Laurent term = m.at(0, j) * minor;
    s = (j % 2 == 0) ? s + term : s - term;
  }
  return s;
}

}  // namespace

TEST_CASE("exact division") {
  testgen::Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    Laurent a = testgen::random_laurent(rng, 2, 4, 3, true);
    Laurent b = testgen::random_laurent(rng, 2, 4, 3, true);
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  // non-divisible case
  Laurent t = Laurent::term(Monomial::gen_pow(1, 1, 1), 1);
  Laurent one = Laurent::one(1);
  CHECK_FALSE(divide_exact(t + one, t - one).has_value());
}

TEST_CASE("determinant matches cofactor expansion") {
  testgen::Rng rng(8);
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 40; ++k) {
      Mat<Laurent> m(n, n, 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = testgen::random_laurent(rng, 2, 2, 2);
      CHECK(laurent_det(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("rank") {
  Mat<Laurent> m(2, 2, 1);
  Laurent t = Laurent::term(Monomial::gen_pow(1, 1, 1), 1);
  Laurent one = Laurent::one(1);
  m.at(0, 0) = t - one; m.at(0, 1) = t + one;
  m.at(1, 0) = (t - one) * Int(2); m.at(1, 1) = (t + one) * Int(2);
  CHECK(laurent_rank(m) == 1);
  m.at(1, 1) = t;
  CHECK(laurent_rank(m) == 2);
  CHECK(laurent_rank(Mat<Laurent>(3, 2, 1)) == 0);
}

TEST_CASE("fraction arithmetic agrees with rational substitution (500 cases)") {
  testgen::Rng rng(9);
  std::uniform_int_distribution<int> pick(1, 5);
  int done = 0;
  while (done < 500) {
    Laurent p1 = testgen::random_laurent(rng, 2, 3, 2, true);
    Laurent q1 = testgen::random_laurent(rng, 2, 3, 2, true);
    Laurent p2 = testgen::random_laurent(rng, 2, 3, 2, true);
    Laurent q2 = testgen::random_laurent(rng, 2, 3, 2, true);
    std::vector<Rat> x = {Rat(pick(rng), pick(rng)), Rat(pick(rng), pick(rng))};
    if (eval(q1, x) == 0 || eval(q2, x) == 0) continue;
    LaurentFraction f1(p1, q1), f2(p2, q2);
    Rat v1 = eval(p1, x) / eval(q1, x);
    Rat v2 = eval(p2, x) / eval(q2, x);
    auto value = [&](const LaurentFraction& f) {
      return eval(f.num(), x) / eval(f.den(), x);
    };
    CHECK(value(f1 * f2) == v1 * v2);
    CHECK(value(f1 + f2) == v1 + v2);
    CHECK(value(f1 - f2) == v1 - v2);
    if (!f2.is_zero() && v2 != 0) CHECK(value(f1 * f2.inverse()) == v1 / v2);
    ++done;
  }
}

TEST_CASE("fraction equality and monomial-sign equality") {
  Laurent t = Laurent::term(Monomial::gen_pow(1, 1, 1), 1);
  Laurent one = Laurent::one(1);
  LaurentFraction f(t * t - one, t - one);
  LaurentFraction g(t + one, one);
  CHECK(f == g);
  LaurentFraction h((t + one).left_mul(Monomial::gen_pow(1, 1, -3)) * Int(-1), one);
  CHECK_FALSE(f == h);
  CHECK(f.equal_up_to_monomial_sign(h));
  CHECK_FALSE(f.equal_up_to_sign(h));
  CHECK(f.equal_up_to_sign(LaurentFraction(-(t + one), one)));
}

TEST_CASE("involute on fractions") {
  Laurent t = Laurent::term(Monomial::gen_pow(1, 1, 1), 1);
  Laurent one = Laurent::one(1);
  LaurentFraction f(t - one, one);
  // (t^-1 - 1) = -(t - 1) * t^-1
  CHECK(f.involute().equal_up_to_monomial_sign(f));
}
