#pragma once

#include <random>

#include "l2t/groupring.hpp"
#include "l2t/hom.hpp"
#include "l2t/leading.hpp"
#include "l2t/word.hpp"

// Deterministic generators shared by the unit and acceptance suites.
namespace testgen {

using l2t::GroupRingElt;
using l2t::Int;
using l2t::Laurent;
using l2t::Monomial;
using l2t::Word;

using Rng = std::mt19937_64;

inline Word random_word(Rng& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<l2t::Letter> letters;
  int n = len(rng);
  for (int i = 0; i < n; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
  return Word::from_letters(rank, letters);
}

inline GroupRingElt random_elt(Rng& rng, int rank, int max_terms, int max_len,
                               bool nonzero = false) {
  std::uniform_int_distribution<int> terms(nonzero ? 1 : 0, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupRingElt a(rank);
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    a.add_term(random_word(rng, rank, max_len), c);
  }
  if (nonzero && a.is_zero()) a.add_term(random_word(rng, rank, max_len), 1);
  return a;
}

inline Monomial random_monomial(Rng& rng, int dim, int max_exp) {
  std::uniform_int_distribution<std::int64_t> e(-max_exp, max_exp);
  std::vector<std::int64_t> v(static_cast<std::size_t>(dim));
  for (auto& x : v) x = e(rng);
  return Monomial(v);
}

inline Laurent random_laurent(Rng& rng, int dim, int max_terms, int max_exp,
                              bool nonzero = false) {
  std::uniform_int_distribution<int> terms(nonzero ? 1 : 0, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Laurent a(dim);
  int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    int c = coeff(rng);
    if (c == 0) c = 1;
    a.add_term(random_monomial(rng, dim, max_exp), c);
  }
  if (nonzero && a.is_zero()) a.add_term(random_monomial(rng, dim, max_exp), 1);
  return a;
}

inline l2t::FreeHom random_hom(Rng& rng, int dom, int cod, int max_len) {
  std::vector<Word> imgs;
  for (int i = 0; i < dom; ++i) imgs.push_back(random_word(rng, cod, max_len));
  return l2t::FreeHom(dom, cod, std::move(imgs));
}

inline l2t::Character random_character(Rng& rng, int dim, int max_num = 3) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<l2t::Rat> v;
  for (int i = 0; i < dim; ++i) v.emplace_back(num(rng), den(rng));
  return l2t::Character(v);
}

}  // namespace testgen
