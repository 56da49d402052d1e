#pragma once

#include <stdexcept>
#include <vector>

#include "l2t/groupring.hpp"
#include "l2t/matrix.hpp"
#include "l2t/word.hpp"

namespace l2t {

// Homomorphism between finitely generated free groups, given by the images
// of the domain generators.
struct FreeHom {
  int domain_rank = 0;
  int codomain_rank = 0;
  std::vector<Word> images;  // images[i] = image of x_{i+1}, reduced over codomain_rank

  FreeHom() = default;
  FreeHom(int dom, int cod, std::vector<Word> imgs)
      : domain_rank(dom), codomain_rank(cod), images(std::move(imgs)) {
    if (static_cast<int>(images.size()) != domain_rank)
      throw std::invalid_argument("image count must equal domain rank");
    for (const auto& w : images)
      if (w.rank() != codomain_rank) throw std::invalid_argument("image rank mismatch");
  }

  static FreeHom identity(int rank) {
    std::vector<Word> imgs;
    for (int i = 1; i <= rank; ++i) imgs.push_back(Word::gen_pow(rank, i, 1));
    return FreeHom(rank, rank, std::move(imgs));
  }
};

inline Word apply_hom(const FreeHom& phi, const Word& w) {
  if (w.rank() != phi.domain_rank) throw std::invalid_argument("word rank mismatch");
  Word r(phi.codomain_rank);
  for (const auto& [g, e] : w.blocks())
    r = r * phi.images[static_cast<std::size_t>(g - 1)].pow(e);
  return r;
}

// (psi o phi).images[i] = psi(phi(x_i)).
inline FreeHom compose(const FreeHom& psi, const FreeHom& phi) {
  if (phi.codomain_rank != psi.domain_rank) throw std::invalid_argument("hom rank mismatch");
  std::vector<Word> imgs;
  imgs.reserve(phi.images.size());
  for (const auto& w : phi.images) imgs.push_back(apply_hom(psi, w));
  return FreeHom(phi.domain_rank, psi.codomain_rank, std::move(imgs));
}

// Fox derivative d(w)/d(x_j): single left-to-right pass accumulating prefix
// products; satisfies d(x_j)/d(x_j) = 1, d(1)/d(x_j) = 0 and
// d(uv) = d(u) + u*d(v).
inline GroupRingElt fox_derivative(const Word& w, int j) {
  if (j < 1 || j > w.rank()) throw std::out_of_range("generator index out of range");
  GroupRingElt result(w.rank());
  Word prefix(w.rank());
  for (const auto& l : w.letters()) {
    Word letter = Word::gen_pow(w.rank(), l.gen, l.sign);
    if (l.gen == j) {
      if (l.sign > 0) {
        result.add_term(prefix, 1);
      } else {
        result.add_term(prefix * letter, -1);
      }
    }
    prefix = prefix * letter;
  }
  return result;
}

// J_phi with (i,j) entry d(phi(x_i))/d(y_j); shape domain_rank x codomain_rank.
inline Mat<GroupRingElt> fox_jacobian(const FreeHom& phi) {
  Mat<GroupRingElt> j(phi.domain_rank, phi.codomain_rank, phi.codomain_rank);
  for (int i = 0; i < phi.domain_rank; ++i)
    for (int k = 0; k < phi.codomain_rank; ++k)
      j.at(i, k) = fox_derivative(phi.images[static_cast<std::size_t>(i)], k + 1);
  return j;
}

// Applies phi to every word of a group-ring element (the induced ring map).
inline GroupRingElt apply_hom(const FreeHom& phi, const GroupRingElt& a) {
  if (a.rank() != phi.domain_rank) throw std::invalid_argument("rank mismatch");
  GroupRingElt r(phi.codomain_rank);
  for (const auto& [w, c] : a.terms()) r.add_term(apply_hom(phi, w), c);
  return r;
}

inline Mat<GroupRingElt> apply_hom(const FreeHom& phi, const Mat<GroupRingElt>& m) {
  Mat<GroupRingElt> r(m.rows(), m.cols(), phi.codomain_rank);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = apply_hom(phi, m.at(i, j));
  return r;
}

}  // namespace l2t
