#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "l2t/hom.hpp"
#include "support/rng.hpp"

using namespace l2t;

namespace {
GroupRingElt elt(int rank, std::initializer_list<std::pair<const char*, int>> terms) {
  GroupRingElt a(rank);
  for (const auto& [w, c] : terms) a.add_term(Word::parse(rank, w), c);
  return a;
}
}  // namespace

TEST_CASE("apply_hom basics") {
  FreeHom phi(2, 2, {Word::parse(2, "x1^2"), Word::parse(2, "x2")});
  CHECK(apply_hom(phi, Word::parse(2, "x1 x2")) == Word::parse(2, "x1 x1 x2"));
  CHECK(apply_hom(phi, Word::identity(2)).is_identity());
  FreeHom id = FreeHom::identity(2);
  testgen::Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    Word w = testgen::random_word(rng, 2, 10);
    CHECK(apply_hom(id, w) == w);
  }
  CHECK_THROWS_AS(apply_hom(phi, Word::identity(3)), std::invalid_argument);
}

TEST_CASE("apply_hom is a homomorphism (500 random cases)") {
  testgen::Rng rng(2);
  for (int k = 0; k < 500; ++k) {
    FreeHom phi = testgen::random_hom(rng, 2, 3, 5);
    Word w1 = testgen::random_word(rng, 2, 8);
    Word w2 = testgen::random_word(rng, 2, 8);
    CHECK(apply_hom(phi, w1 * w2) == apply_hom(phi, w1) * apply_hom(phi, w2));
  }
}

TEST_CASE("compose") {
  FreeHom phi(2, 2, {Word::parse(2, "x1 x2"), Word::parse(2, "x2")});
  FreeHom id = FreeHom::identity(2);
  CHECK(compose(id, phi).images == phi.images);
  CHECK(compose(phi, id).images == phi.images);
  testgen::Rng rng(3);
  for (int k = 0; k < 500; ++k) {
    FreeHom f = testgen::random_hom(rng, 2, 2, 4);
    FreeHom g = testgen::random_hom(rng, 2, 2, 4);
    Word w = testgen::random_word(rng, 2, 8);
    CHECK(apply_hom(compose(g, f), w) == apply_hom(g, apply_hom(f, w)));
  }
  CHECK_THROWS_AS(compose(testgen::random_hom(rng, 3, 3, 3), testgen::random_hom(rng, 2, 2, 3)),
                  std::invalid_argument);
}

TEST_CASE("fox derivative axioms") {
  // d(y_j)/d(y_j) = 1, d(1)/d(y_j) = 0
  CHECK(fox_derivative(Word::gen_pow(2, 1, 1), 1) == GroupRingElt::one(2));
  CHECK(fox_derivative(Word::gen_pow(2, 1, 1), 2).is_zero());
  CHECK(fox_derivative(Word::identity(2), 1).is_zero());
  // d(y^-1)/dy = -y^-1, from the product rule applied to y*y^-1 = 1
  CHECK(fox_derivative(Word::gen_pow(1, 1, -1), 1) == elt(1, {{"x1^-1", -1}}));
}

TEST_CASE("fox derivative of the genus-2 word") {
  // w = y x y x^-1 y^-1 over <x, y> = <x1, x2>:  dw/dx = y - yxyx^-1
  Word w = Word::parse(2, "x2 x1 x2 x1^-1 x2^-1");
  CHECK(fox_derivative(w, 1) == elt(2, {{"x2", 1}, {"x2 x1 x2 x1^-1", -1}}));
  CHECK(fox_derivative(w, 2) ==
        elt(2, {{"1", 1}, {"x2 x1", 1}, {"x2 x1 x2 x1^-1 x2^-1", -1}}));
}

TEST_CASE("fox product rule on 500 random cases") {
  testgen::Rng rng(4);
  for (int k = 0; k < 500; ++k) {
    Word u = testgen::random_word(rng, 2, 10);
    Word v = testgen::random_word(rng, 2, 10);
    int j = (k % 2) + 1;
    GroupRingElt lhs = fox_derivative(u * v, j);
    GroupRingElt rhs = fox_derivative(u, j) + GroupRingElt::term(u, 1) * fox_derivative(v, j);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("fundamental fox identity on 300 random words") {
  // w - 1 = sum_j dw/dy_j * (y_j - 1)
  testgen::Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    Word w = testgen::random_word(rng, 3, 12);
    GroupRingElt lhs = GroupRingElt::term(w, 1) - GroupRingElt::one(3);
    GroupRingElt rhs(3);
    for (int j = 1; j <= 3; ++j) {
      GroupRingElt yj_minus_1 =
          GroupRingElt::term(Word::gen_pow(3, j, 1), 1) - GroupRingElt::one(3);
      rhs = rhs + fox_derivative(w, j) * yj_minus_1;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("fox jacobian: identity hom") {
  Mat<GroupRingElt> j = fox_jacobian(FreeHom::identity(2));
  CHECK(j == Mat<GroupRingElt>::identity(2, 2));
}

TEST_CASE("fox jacobian: genus-2 sutured handlebody hom") {
  // phi: x -> x, u -> yxyx^-1y^-1 from <x,u> to <x,y>
  Word u = Word::parse(2, "x2 x1 x2 x1^-1 x2^-1");
  FreeHom phi(2, 2, {Word::parse(2, "x1"), u});
  Mat<GroupRingElt> j = fox_jacobian(phi);
  CHECK(j.at(0, 0) == GroupRingElt::one(2));
  CHECK(j.at(0, 1).is_zero());
  CHECK(j.at(1, 0) == elt(2, {{"x2", 1}, {"x2 x1 x2 x1^-1", -1}}));
  // 1 + yx - u
  GroupRingElt expect = elt(2, {{"1", 1}, {"x2 x1", 1}});
  expect.add_term(u, -1);
  CHECK(j.at(1, 1) == expect);
}

TEST_CASE("fox jacobian: n-chain hom, n = 4") {
  // u_i -> x_i x_{i+1}^-1 (i = 1, 2), u_3 -> x_3^2 x_2 x_1
  FreeHom phi(3, 3,
              {Word::parse(3, "x1 x2^-1"), Word::parse(3, "x2 x3^-1"),
               Word::parse(3, "x3^2 x2 x1")});
  Mat<GroupRingElt> j = fox_jacobian(phi);
  CHECK(j.at(0, 0) == GroupRingElt::one(3));
  CHECK(j.at(0, 1) == elt(3, {{"x1 x2^-1", -1}}));
  CHECK(j.at(0, 2).is_zero());
  CHECK(j.at(1, 0).is_zero());
  CHECK(j.at(1, 1) == GroupRingElt::one(3));
  CHECK(j.at(1, 2) == elt(3, {{"x2 x3^-1", -1}}));
  CHECK(j.at(2, 0) == elt(3, {{"x3^2 x2", 1}}));
  CHECK(j.at(2, 1) == elt(3, {{"x3^2", 1}}));
  CHECK(j.at(2, 2) == elt(3, {{"1", 1}, {"x3", 1}}));
}

TEST_CASE("chain rule: J_{psi o phi} = phi applied to nothing... matrix identity (100 cases)") {
  // J_{psi o phi} = psi(J_phi) * J_psi, entrywise application of psi.
  testgen::Rng rng(6);
  for (int k = 0; k < 100; ++k) {
    FreeHom phi = testgen::random_hom(rng, 2, 2, 5);
    FreeHom psi = testgen::random_hom(rng, 2, 3, 5);
    Mat<GroupRingElt> lhs = fox_jacobian(compose(psi, phi));
    Mat<GroupRingElt> rhs = apply_hom(psi, fox_jacobian(phi)) * fox_jacobian(psi);
    CHECK(lhs == rhs);
  }
}
