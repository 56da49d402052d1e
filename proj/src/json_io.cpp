#include "l2t/json_io.hpp"

namespace l2t {

Json to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
  return x.str();  // decimal string beyond 64 bits
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or integer string");
}

Json to_json(const Word& w) { return w.str(); }

Word word_from_json(const Json& j, int rank) {
  if (!j.is_string()) throw std::invalid_argument("expected word string");
  return Word::parse(rank, j.get<std::string>());
}

Json to_json(const GroupRingElt& a) {
  Json out = Json::array();
  for (const auto& [w, c] : a.terms()) out.push_back({{"coeff", to_json(c)}, {"word", w.str()}});
  return out;
}

GroupRingElt elt_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("expected term array");
  GroupRingElt a(rank);
  for (const auto& t : j)
    a.add_term(word_from_json(t.at("word"), rank), int_from_json(t.at("coeff")));
  return a;
}

Json to_json(const Laurent& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms())
    out.push_back({{"coeff", to_json(c)}, {"exps", m.exps()}});
  return out;
}

Laurent laurent_from_json(const Json& j, int dim) {
  if (!j.is_array()) throw std::invalid_argument("expected term array");
  Laurent p(dim);
  for (const auto& t : j) {
    auto exps = t.at("exps").get<std::vector<std::int64_t>>();
    if (static_cast<int>(exps.size()) != dim) throw std::invalid_argument("exponent dimension mismatch");
    p.add_term(Monomial(exps), int_from_json(t.at("coeff")));
  }
  return p;
}

Json to_json(const LaurentFraction& f) {
  return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Json to_json(const Character& c) {
  Json values = Json::array();
  for (const auto& v : c.values()) {
    std::ostringstream os;
    os << v;
    values.push_back(os.str());
  }
  return {{"values", values}};
}

Character character_from_json(const Json& j) {
  std::vector<Rat> values;
  for (const auto& v : j.at("values")) {
    if (v.is_number_integer())
      values.emplace_back(v.get<std::int64_t>());
    else
      values.emplace_back(Rat(v.get<std::string>()));
  }
  return Character(values);
}

Json to_json(const FreeHom& h) {
  Json images = Json::array();
  for (const auto& w : h.images) images.push_back(w.str());
  return {{"domain_rank", h.domain_rank}, {"codomain_rank", h.codomain_rank}, {"images", images}};
}

FreeHom hom_from_json(const Json& j) {
  int dom = j.at("domain_rank").get<int>();
  int cod = j.at("codomain_rank").get<int>();
  std::vector<Word> images;
  for (const auto& w : j.at("images")) images.push_back(word_from_json(w, cod));
  return FreeHom(dom, cod, std::move(images));
}

namespace {
template <class G>
Json matrix_to_json(const Mat<GroupRing<G>>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class G, class FromJson>
Mat<GroupRing<G>> matrix_from_json(const Json& j, int rank, FromJson parse_entry) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  Mat<GroupRing<G>> m(rows, cols, rank);
  const Json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows) throw std::invalid_argument("row count mismatch");
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != cols)
      throw std::invalid_argument("column count mismatch");
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = parse_entry(entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], rank);
  }
  return m;
}

template <class G>
Json complex_to_json(const BasedComplex<G>& c, const char* ring) {
  Json bs = Json::array();
  for (const auto& b : c.boundaries) bs.push_back(matrix_to_json(b));
  return {{"ring", ring}, {"rank", c.rank}, {"dims", c.dims}, {"boundaries", bs}};
}
}  // namespace

Json to_json(const Mat<GroupRingElt>& m) { return matrix_to_json(m); }
Json to_json(const Mat<Laurent>& m) { return matrix_to_json(m); }

Json to_json(const BasedComplex<Word>& c) { return complex_to_json(c, "free"); }
Json to_json(const BasedComplex<Monomial>& c) { return complex_to_json(c, "abelian"); }

bool complex_json_is_abelian(const Json& j) {
  return j.contains("ring") && j.at("ring").get<std::string>() == "abelian";
}

BasedComplex<Word> complex_from_json(const Json& j) {
  BasedComplex<Word> c;
  c.rank = j.at("rank").get<int>();
  c.dims = j.at("dims").get<std::vector<int>>();
  for (const auto& b : j.at("boundaries"))
    c.boundaries.push_back(matrix_from_json<Word>(b, c.rank, [](const Json& e, int rank) {
      return elt_from_json(e, rank);
    }));
  return c;
}

BasedComplex<Monomial> abelian_complex_from_json(const Json& j) {
  BasedComplex<Monomial> c;
  c.rank = j.at("rank").get<int>();
  c.dims = j.at("dims").get<std::vector<int>>();
  for (const auto& b : j.at("boundaries"))
    c.boundaries.push_back(matrix_from_json<Monomial>(b, c.rank, [](const Json& e, int rank) {
      return laurent_from_json(e, rank);
    }));
  return c;
}

Json to_json(const IntPolytope& p) {
  if (p.is_empty()) return {{"empty", true}, {"dim", p.dim()}};
  return {{"dim", p.dim()}, {"vertices", p.vertices()}};
}

IntPolytope polytope_from_json(const Json& j) {
  int dim = j.at("dim").get<int>();
  if (j.contains("empty") && j.at("empty").get<bool>()) return IntPolytope::empty(dim);
  auto vertices = j.at("vertices").get<std::vector<LatticePoint>>();
  return IntPolytope::hull(dim, std::move(vertices));
}

Json to_json(const PolytopeDiff& d) {
  return {{"plus", to_json(d.plus)}, {"minus", to_json(d.minus)}};
}

Json to_json(const WhPolytope& w) {
  return {{"plus", to_json(w.diff.plus)}, {"minus", to_json(w.diff.minus)}, {"zero", w.is_zero()}};
}

Json to_json(const CoreGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  return {{"vertices", g.num_vertices}, {"base", g.base}, {"edges", edges}, {"rank", g.subgroup_rank()}};
}

Json to_json(const FiniteQuotientSpec& s) {
  return {{"rank", s.rank}, {"degree", s.degree}, {"perms", s.perms}};
}

FiniteQuotientSpec quotient_spec_from_json(const Json& j) {
  FiniteQuotientSpec s;
  s.rank = j.at("rank").get<int>();
  s.degree = j.at("degree").get<int>();
  s.perms = j.at("perms").get<std::vector<std::vector<int>>>();
  return s;
}

Json to_json(const FKEstimate& e) {
  return {{"estimate", e.estimate}, {"stderr", e.stderr_},    {"N", e.matrix_size},
          {"trials", e.trials},     {"discarded", e.discarded}, {"seed", e.seed}};
}

Json to_json(const oracle::InvertVerdict& v) {
  using namespace oracle;
  if (const auto* ci = std::get_if<CertifiedInvertible>(&v.v)) {
    if (std::holds_alternative<AbelianDetCert>(ci->certificate))
      return {{"verdict", "invertible"}, {"certificate", {{"type", "abelian-det"}}}};
    const auto& rs = std::get<RandomSubstitutionCert>(ci->certificate);
    return {{"verdict", "invertible"},
            {"certificate", {{"type", "random-substitution"}, {"size", rs.size}, {"seed", rs.seed}}}};
  }
  if (const auto* cs = std::get_if<CertifiedSingular>(&v.v)) {
    const char* why = cs->reason == SingularReason::non_square          ? "non-square"
                      : cs->reason == SingularReason::zero_row_or_column ? "zero-row-or-column"
                                                                         : "exact-hom-decision";
    return {{"verdict", "singular"}, {"reason", why}};
  }
  const auto& u = std::get<Undecided>(v.v);
  return {{"verdict", "undecided"}, {"sizes_tried", u.sizes_tried}};
}

namespace {
template <class G>
Json torsion_to_json(const TorsionValue<G>& t) {
  Json out;
  out["zero"] = t.zero;
  if (t.zero) return out;
  Json factors = Json::array();
  for (const auto& f : t.factors)
    factors.push_back({{"matrix", matrix_to_json(f.matrix)}, {"exponent", f.exponent}});
  out["factors"] = factors;
  if (t.element_rep) out["element_rep"] = to_json(*t.element_rep);
  if (t.abelian_det) out["abelian_det"] = to_json(*t.abelian_det);
  if (t.polytope) out["polytope"] = to_json(*t.polytope);
  return out;
}
}  // namespace

Json to_json(const TorsionValue<Word>& t) { return torsion_to_json(t); }
Json to_json(const TorsionValue<Monomial>& t) { return torsion_to_json(t); }

Json to_json(const std::vector<VertexReport>& reps) {
  Json out = Json::array();
  for (const auto& r : reps)
    out.push_back({{"vertex", r.vertex},
                   {"monic", r.monic},
                   {"coefficient", to_json(r.coefficient)},
                   {"support_words", r.support_words}});
  return out;
}

}  // namespace l2t
