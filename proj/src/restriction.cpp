#include "l2t/restriction.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace l2t {

namespace {

void validate_spec(const FiniteQuotientSpec& spec) {
  if (spec.rank < 1 || spec.degree < 1) throw std::invalid_argument("invalid quotient spec");
  if (static_cast<int>(spec.perms.size()) != spec.rank)
    throw std::invalid_argument("one permutation per generator required");
  for (const auto& p : spec.perms) {
    if (static_cast<int>(p.size()) != spec.degree) throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> hit(static_cast<std::size_t>(spec.degree), false);
    for (int v : p) {
      if (v < 1 || v > spec.degree || hit[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("not a permutation");
      hit[static_cast<std::size_t>(v - 1)] = true;
    }
  }
  // transitivity
  std::vector<bool> seen(static_cast<std::size_t>(spec.degree), false);
  std::queue<int> q;
  seen[0] = true;
  q.push(1);
  int count = 1;
  while (!q.empty()) {
    int at = q.front();
    q.pop();
    for (const auto& p : spec.perms) {
      int fwd = p[static_cast<std::size_t>(at - 1)];
      int bwd = 0;
      for (int i = 1; i <= spec.degree; ++i)
        if (p[static_cast<std::size_t>(i - 1)] == at) bwd = i;
      for (int nxt : {fwd, bwd})
        if (!seen[static_cast<std::size_t>(nxt - 1)]) {
          seen[static_cast<std::size_t>(nxt - 1)] = true;
          ++count;
          q.push(nxt);
        }
    }
  }
  if (count != spec.degree) throw std::invalid_argument("coset action not transitive");
  // normality: the image permutation group must act regularly, i.e. have
  // order exactly degree (point stabilizer = kernel)
  std::set<std::vector<int>> group;
  std::vector<int> id(static_cast<std::size_t>(spec.degree));
  for (int i = 0; i < spec.degree; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  std::queue<std::vector<int>> work;
  group.insert(id);
  work.push(id);
  const std::size_t cap = 100000;
  while (!work.empty()) {
    auto cur = work.front();
    work.pop();
    for (const auto& p : spec.perms) {
      std::vector<int> nxt(static_cast<std::size_t>(spec.degree));
      for (int i = 0; i < spec.degree; ++i)
        nxt[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(cur[static_cast<std::size_t>(i)] - 1)];
      if (group.insert(nxt).second) {
        if (group.size() > cap) throw std::invalid_argument("quotient group too large");
        work.push(nxt);
      }
    }
  }
  if (static_cast<int>(group.size()) != spec.degree)
    throw std::invalid_argument("subgroup is not normal (coset action not regular)");
}

}  // namespace

int SchreierData::coset_of(int coset, int gen, int sign) const {
  const auto& p = spec.perms[static_cast<std::size_t>(gen - 1)];
  if (sign > 0) return p[static_cast<std::size_t>(coset - 1)];
  for (int i = 1; i <= spec.degree; ++i)
    if (p[static_cast<std::size_t>(i - 1)] == coset) return i;
  throw std::logic_error("permutation preimage not found");
}

int SchreierData::coset_of_word(int coset, const Word& w) const {
  int at = coset;
  for (const auto& l : w.letters()) at = coset_of(at, l.gen, l.sign);
  return at;
}

SchreierData coset_table(const FiniteQuotientSpec& spec, int tree_variant) {
  validate_spec(spec);
  SchreierData data;
  data.spec = spec;
  data.transversal.assign(static_cast<std::size_t>(spec.degree), Word::identity(spec.rank));
  std::vector<bool> known(static_cast<std::size_t>(spec.degree), false);
  known[0] = true;
  // scan order of generators varies with tree_variant for section tests
  std::vector<int> gens;
  for (int g = 1; g <= spec.rank; ++g) gens.push_back(g);
  for (int t = 0; t < tree_variant % spec.rank; ++t)
    std::rotate(gens.begin(), gens.begin() + 1, gens.end());
  std::vector<std::pair<int, int>> tree_edges;  // (coset, gen) of tree crossings
  std::queue<int> q;
  q.push(1);
  while (!q.empty()) {
    int at = q.front();
    q.pop();
    for (int g : gens) {
      for (int sign : {1, -1}) {
        int to = data.coset_of(at, g, sign);
        if (known[static_cast<std::size_t>(to - 1)]) continue;
        known[static_cast<std::size_t>(to - 1)] = true;
        data.transversal[static_cast<std::size_t>(to - 1)] =
            data.transversal[static_cast<std::size_t>(at - 1)] * Word::gen_pow(spec.rank, g, sign);
        tree_edges.emplace_back(sign > 0 ? at : to, g);
        q.push(to);
      }
    }
  }
  data.edge_to_basis.assign(static_cast<std::size_t>(spec.degree),
                            std::vector<int>(static_cast<std::size_t>(spec.rank), -1));
  for (int k = 1; k <= spec.degree; ++k)
    for (int g = 1; g <= spec.rank; ++g) {
      if (std::find(tree_edges.begin(), tree_edges.end(), std::make_pair(k, g)) != tree_edges.end())
        continue;
      int j = data.coset_of(k, g, 1);
      Word s = data.transversal[static_cast<std::size_t>(k - 1)] * Word::gen_pow(spec.rank, g, 1) *
               data.transversal[static_cast<std::size_t>(j - 1)].inverse();
      data.edge_to_basis[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(g - 1)] =
          static_cast<int>(data.basis.size());
      data.basis.push_back(s);
    }
  return data;
}

Word rewrite(const Word& w, const SchreierData& data) {
  if (w.rank() != data.spec.rank) throw std::invalid_argument("word rank mismatch");
  std::vector<Word::Block> blocks;
  int rank_l = data.subgroup_rank();
  int at = 1;
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      int idx = data.edge_to_basis[static_cast<std::size_t>(at - 1)][static_cast<std::size_t>(l.gen - 1)];
      if (idx >= 0) blocks.emplace_back(idx + 1, 1);
      at = data.coset_of(at, l.gen, 1);
    } else {
      int from = data.coset_of(at, l.gen, -1);
      int idx = data.edge_to_basis[static_cast<std::size_t>(from - 1)][static_cast<std::size_t>(l.gen - 1)];
      if (idx >= 0) blocks.emplace_back(idx + 1, -1);
      at = from;
    }
  }
  if (at != 1) throw std::domain_error("word is not in the subgroup");
  return Word::from_blocks(rank_l, std::move(blocks));
}

Word expand(const Word& w_in_basis, const SchreierData& data) {
  if (w_in_basis.rank() != data.subgroup_rank()) throw std::invalid_argument("word rank mismatch");
  Word out = Word::identity(data.spec.rank);
  for (const auto& l : w_in_basis.letters()) {
    const Word& s = data.basis[static_cast<std::size_t>(l.gen - 1)];
    out = out * (l.sign > 0 ? s : s.inverse());
  }
  return out;
}

Mat<GroupRingElt> lambda_matrix(const GroupRingElt& z, const SchreierData& data) {
  if (z.rank() != data.spec.rank) throw std::invalid_argument("rank mismatch");
  int d = data.spec.degree;
  Mat<GroupRingElt> m(d, d, data.subgroup_rank());
  for (const auto& [w, c] : z.terms()) {
    for (int k = 1; k <= d; ++k) {
      int j = data.coset_of_word(k, w);
      Word l = data.transversal[static_cast<std::size_t>(k - 1)] * w *
               data.transversal[static_cast<std::size_t>(j - 1)].inverse();
      m.at(k - 1, j - 1).add_term(rewrite(l, data), c);
    }
  }
  return m;
}

Mat<GroupRingElt> lambda_matrix(const Mat<GroupRingElt>& mat, const SchreierData& data) {
  int d = data.spec.degree;
  Mat<GroupRingElt> out(mat.rows() * d, mat.cols() * d, data.subgroup_rank());
  for (int i = 0; i < mat.rows(); ++i)
    for (int j = 0; j < mat.cols(); ++j) {
      Mat<GroupRingElt> block = lambda_matrix(mat.at(i, j), data);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) out.at(i * d + a, j * d + b) = block.at(a, b);
    }
  return out;
}

std::optional<Laurent> res_invariants(const GroupRingElt& z, const SchreierData& data) {
  if (z.is_zero()) throw std::invalid_argument("restriction of zero");
  Laurent det = laurent_det(abelianize_matrix(lambda_matrix(z, data)));
  if (det.is_zero()) return std::nullopt;
  return det;
}

Character restrict_character(const Character& phi, const SchreierData& data) {
  std::vector<Rat> values;
  values.reserve(data.basis.size());
  for (const auto& s : data.basis) values.push_back(phi.value(s.abelian()));
  return Character(values);
}

std::optional<bool> check_res_leading_commute(const GroupRingElt& z, const Character& phi,
                                              const SchreierData& data) {
  auto lhs_full = res_invariants(z, data);
  auto rhs = res_invariants(leading_elt(phi, z), data);
  if (!lhs_full || !rhs) return std::nullopt;
  Character phi_l = restrict_character(phi, data);
  Laurent lhs = leading_elt(phi_l, *lhs_full);
  return equal_up_to_monomial_sign(lhs, *rhs);
}

std::optional<LaurentFraction> res_torsion(const TorsionValue<Word>& t, const SchreierData& data) {
  if (t.zero) throw std::invalid_argument("restriction of zero torsion");
  LaurentFraction acc = LaurentFraction::one(data.subgroup_rank());
  for (const auto& f : t.factors) {
    Laurent det = laurent_det(abelianize_matrix(lambda_matrix(f.matrix, data)));
    if (det.is_zero()) return std::nullopt;
    LaurentFraction fd = LaurentFraction::of(det);
    acc = acc * (f.exponent > 0 ? fd : fd.inverse());
  }
  return acc;
}

}  // namespace l2t
