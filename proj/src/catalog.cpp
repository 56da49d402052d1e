#include "l2t/catalog.hpp"

#include "l2t/stallings.hpp"

namespace l2t {

HomTorsion torsion_of_hom(const FreeHom& phi, const oracle::Budget& budget, int vertex_cap) {
  HomTorsion out;
  if (phi.domain_rank != phi.codomain_rank) {
    out.status = HomTorsion::Status::zero;
    out.decided_by = "exact-hom-decision";
    return out;
  }
  Mat<GroupRingElt> j = fox_jacobian(phi);
  auto make_value = [&](const std::string& how) {
    out.status = HomTorsion::Status::value;
    out.decided_by = how;
    out.torsion.zero = false;
    out.torsion.factors.push_back({j, +1});
    fill_invariants(out.torsion, phi.codomain_rank);
  };
  std::optional<bool> weak_iso = decide_weak_iso(phi, vertex_cap);
  if (weak_iso.has_value()) {
    if (*weak_iso)
      make_value("exact-hom-decision");
    else {
      out.status = HomTorsion::Status::zero;
      out.decided_by = "exact-hom-decision";
    }
    return out;
  }
  oracle::InvertVerdict verdict = oracle::certify(j, budget);
  if (verdict.invertible()) {
    make_value("certificate");
  } else if (verdict.singular()) {
    out.status = HomTorsion::Status::zero;
    out.decided_by = "certificate";
  } else {
    out.status = HomTorsion::Status::undecided;
    out.decided_by = "certificate";
  }
  return out;
}

FreeHom chainlink_hom(int n) {
  if (n < 3) throw std::invalid_argument("chain link needs n >= 3");
  int rank = n - 1;
  std::vector<Word> images;
  for (int i = 1; i <= n - 2; ++i)
    images.push_back(Word::gen_pow(rank, i, 1) * Word::gen_pow(rank, i + 1, -1));
  Word last = Word::gen_pow(rank, rank, 2);
  for (int i = n - 2; i >= 1; --i) last = last * Word::gen_pow(rank, i, 1);
  images.push_back(last);
  return FreeHom(rank, rank, std::move(images));
}

Word chainlink_y(int n, int i) {
  int rank = n - 1;
  if (i < 1 || i > rank) throw std::out_of_range("basis index");
  Word y = Word::identity(rank);
  for (int k = rank; k >= i; --k) y = y * Word::gen_pow(rank, k, 1);
  return y;
}

GroupRingElt chainlink_sum(int n) {
  int rank = n - 1;
  GroupRingElt s = GroupRingElt::one(rank);
  for (int i = 1; i <= rank; ++i) s.add_term(chainlink_y(n, i), 1);
  return s;
}

FreeHom genus2_hom() {
  Word u = Word::parse(2, "x2 x1 x2 x1^-1 x2^-1");
  return FreeHom(2, 2, {Word::gen_pow(2, 1, 1), u});
}

GroupRingElt genus2_expected_rep() {
  GroupRingElt e = GroupRingElt::one(2);
  e.add_term(Word::parse(2, "x2 x1"), 1);
  e.add_term(Word::parse(2, "x2 x1 x2 x1^-1 x2^-1"), -1);
  return e;
}

std::vector<Word> trefoil_relators() {
  return {Word::parse(2, "x1 x2 x1 x2^-1 x1^-1 x2^-1")};
}

BasedComplex<Word> circle_complex() {
  BasedComplex<Word> c;
  c.rank = 1;
  c.dims = {1, 1};
  Mat<GroupRingElt> a(1, 1, 1);
  a.at(0, 0) = GroupRingElt::term(Word::gen_pow(1, 1, 1), 1) - GroupRingElt::one(1);
  c.boundaries.push_back(std::move(a));
  return c;
}

BasedComplex<Monomial> torus_complex() {
  BasedComplex<Monomial> c;
  c.rank = 2;
  c.dims = {1, 2, 1};
  Laurent one = Laurent::one(2);
  Laurent t1 = Laurent::term(Monomial::gen_pow(2, 1, 1), 1);
  Laurent t2 = Laurent::term(Monomial::gen_pow(2, 2, 1), 1);
  Mat<Laurent> a2(1, 2, 2);
  a2.at(0, 0) = one - t2;
  a2.at(0, 1) = t1 - one;
  Mat<Laurent> a1(2, 1, 2);
  a1.at(0, 0) = t1 - one;
  a1.at(1, 0) = t2 - one;
  c.boundaries.push_back(std::move(a2));
  c.boundaries.push_back(std::move(a1));
  return c;
}

}  // namespace l2t
