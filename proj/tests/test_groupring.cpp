#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2t/groupring.hpp"
#include "support/rng.hpp"

using namespace l2t;

namespace {
GroupRingElt elt(int rank, std::initializer_list<std::pair<const char*, int>> terms) {
  GroupRingElt a(rank);
  for (const auto& [w, c] : terms) a.add_term(Word::parse(rank, w), c);
  return a;
}
}  // namespace

TEST_CASE("ring basics") {
  GroupRingElt x = GroupRingElt::term(Word::parse(1, "x1"), 1);
  GroupRingElt one = GroupRingElt::one(1);
  CHECK((x - one) * (x + one) == elt(1, {{"x1^2", 1}, {"1", -1}}));
  CHECK((x * GroupRingElt::zero(1)).is_zero());
  CHECK_THROWS_AS(x * GroupRingElt::one(2), std::invalid_argument);
}

TEST_CASE("mul is associative on 300 random triples") {
  testgen::Rng rng(42);
  for (int k = 0; k < 300; ++k) {
    auto a = testgen::random_elt(rng, 2, 5, 6);
    auto b = testgen::random_elt(rng, 2, 5, 6);
    auto c = testgen::random_elt(rng, 2, 5, 6);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("distributivity and scalar laws on random elements") {
  testgen::Rng rng(43);
  for (int k = 0; k < 100; ++k) {
    auto a = testgen::random_elt(rng, 2, 4, 5);
    auto b = testgen::random_elt(rng, 2, 4, 5);
    auto c = testgen::random_elt(rng, 2, 4, 5);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("involute basics") {
  auto a = elt(2, {{"x1", 2}, {"x2^-1", 1}});
  CHECK(a.involute() == elt(2, {{"x1^-1", 2}, {"x2", 1}}));
}

TEST_CASE("involution is an anti-automorphism of order two (300 random)") {
  testgen::Rng rng(44);
  for (int k = 0; k < 300; ++k) {
    auto a = testgen::random_elt(rng, 2, 4, 6);
    auto b = testgen::random_elt(rng, 2, 4, 6);
    CHECK(a.involute().involute() == a);
    CHECK((a * b).involute() == b.involute() * a.involute());
    CHECK((a + b).involute() == a.involute() + b.involute());
  }
}

TEST_CASE("abelianize examples") {
  CHECK(abelianize(elt(2, {{"x1 x2 x1^-1", 1}})) ==
        Laurent::term(Monomial::gen_pow(2, 2, 1), 1));
  CHECK(abelianize(elt(2, {{"x1 x2", 1}, {"x2 x1", -1}})).is_zero());
}

TEST_CASE("abelianize is a ring homomorphism (300 random pairs)") {
  testgen::Rng rng(45);
  for (int k = 0; k < 300; ++k) {
    auto a = testgen::random_elt(rng, 2, 4, 6);
    auto b = testgen::random_elt(rng, 2, 4, 6);
    CHECK(abelianize(a * b) == abelianize(a) * abelianize(b));
    CHECK(abelianize(a + b) == abelianize(a) + abelianize(b));
  }
}

TEST_CASE("involute commutes with abelianize up to variable inversion (200 random)") {
  testgen::Rng rng(46);
  for (int k = 0; k < 200; ++k) {
    auto a = testgen::random_elt(rng, 2, 4, 6);
    CHECK(abelianize(a.involute()) == abelianize(a).involute());
  }
}

TEST_CASE("trivial units") {
  auto u = elt(2, {{"x1 x2^-1", -1}});
  auto tu = u.as_trivial_unit();
  REQUIRE(tu.has_value());
  CHECK(tu->first == -1);
  CHECK(tu->second == Word::parse(2, "x1 x2^-1"));
  CHECK_FALSE(elt(2, {{"1", 1}, {"x1", 1}}).as_trivial_unit().has_value());
  CHECK_FALSE(elt(2, {{"x1", 2}}).as_trivial_unit().has_value());
}

TEST_CASE("equal_up_to_trivial_unit (left multiples)") {
  testgen::Rng rng(47);
  auto a = elt(2, {{"1", 1}, {"x1", 1}});
  auto b = elt(2, {{"1", 1}, {"x2", 1}});
  CHECK(equal_up_to_trivial_unit(a, a.left_mul(Word::parse(2, "x1^-1 x2")) * Int(-1)));
  CHECK_FALSE(equal_up_to_trivial_unit(a, b));
  for (int k = 0; k < 100; ++k) {
    auto c = testgen::random_elt(rng, 2, 4, 5, true);
    Word w = testgen::random_word(rng, 2, 6);
    CHECK(equal_up_to_trivial_unit(c, c.left_mul(w)));
    CHECK(equal_up_to_trivial_unit(c, -c.left_mul(w)));
  }
}

TEST_CASE("conjugated sum is not a left trivial-unit multiple") {
  // chain-link n = 3 normalization shape: the torsion module has the
  // conjugation-aware check; the plain one must say false here.
  int rank = 2;
  Word y1 = Word::parse(rank, "x2 x1");
  Word y2 = Word::parse(rank, "x2");
  GroupRingElt sum = GroupRingElt::one(rank);
  sum.add_term(y1, 1);
  sum.add_term(y2, 1);
  Word g = Word::gen_pow(rank, rank, 1);
  GroupRingElt conj = sum.left_mul(g).right_mul(g.inverse());
  CHECK_FALSE(equal_up_to_trivial_unit(sum, conj));
}

TEST_CASE("Z F is a domain at test scale: 1000 random nonzero products") {
  testgen::Rng rng(48);
  for (int k = 0; k < 1000; ++k) {
    auto a = testgen::random_elt(rng, 2, 3, 5, true);
    auto b = testgen::random_elt(rng, 2, 3, 5, true);
    CHECK_FALSE((a * b).is_zero());
  }
}
