#pragma once

#include <json.hpp>

#include "l2t/catalog.hpp"
#include "l2t/complex.hpp"
#include "l2t/fkdet.hpp"
#include "l2t/oracle.hpp"
#include "l2t/polytope.hpp"
#include "l2t/restriction.hpp"
#include "l2t/stallings.hpp"

namespace l2t {

using Json = nlohmann::json;

// Schema errors raise Json::exception or std::invalid_argument; the CLI maps
// both to exit code 2.

Json to_json(const Int& x);
Int int_from_json(const Json& j);

Json to_json(const Word& w);
Word word_from_json(const Json& j, int rank);

Json to_json(const GroupRingElt& a);
GroupRingElt elt_from_json(const Json& j, int rank);

Json to_json(const Laurent& p);
Laurent laurent_from_json(const Json& j, int dim);
Json to_json(const LaurentFraction& f);

Json to_json(const Character& c);
Character character_from_json(const Json& j);

Json to_json(const FreeHom& h);
FreeHom hom_from_json(const Json& j);

Json to_json(const Mat<GroupRingElt>& m);
Json to_json(const Mat<Laurent>& m);

Json to_json(const BasedComplex<Word>& c);
Json to_json(const BasedComplex<Monomial>& c);
BasedComplex<Word> complex_from_json(const Json& j);
BasedComplex<Monomial> abelian_complex_from_json(const Json& j);
bool complex_json_is_abelian(const Json& j);

Json to_json(const IntPolytope& p);
IntPolytope polytope_from_json(const Json& j);
Json to_json(const PolytopeDiff& d);
Json to_json(const WhPolytope& w);

Json to_json(const CoreGraph& g);

Json to_json(const FiniteQuotientSpec& s);
FiniteQuotientSpec quotient_spec_from_json(const Json& j);

Json to_json(const FKEstimate& e);

Json to_json(const oracle::InvertVerdict& v);

Json to_json(const TorsionValue<Word>& t);
Json to_json(const TorsionValue<Monomial>& t);

Json to_json(const std::vector<VertexReport>& reps);

}  // namespace l2t
