#pragma once

#include <json.hpp>

#include "mucurve/explore.hpp"

namespace mucurve {

// ordered_json keeps insertion order, so identical inputs yield byte-identical
// documents.
using Json = nlohmann::ordered_json;

Json elem_to_json(const FieldElem& x);
FieldElem elem_from_json(const Json& j, const ContextPtr& ctx);

// Ascending coefficient array of exact strings ("p/q" over Q).
Json poly_to_json(const Poly& f);
Poly poly_from_json(const Json& j, const ContextPtr& ctx);

// A polynomial in t over K(eps) with K[eps] coefficients, laid out by eps
// power: [constant part, eps-coefficient part, ...], each a t-coefficient array.
Json eps_poly_to_json(const Poly& f);
Poly eps_poly_from_json(const Json& j, const ContextPtr& eps_ctx);

Json triple_to_json(const ParamTriple& t);
ParamTriple triple_from_json(const Json& j, const ContextPtr& ctx, bool checked = true);

Json mubasis_to_json(const MuBasis& b);
Json identity_report_to_json(const IdentityReport& r);
Json verification_report_to_json(const VerificationReport& r);
Json census_to_json(const CensusReport& r);

Json approxseq_to_json(const ApproxSeq& seq);
ApproxSeq approxseq_from_json(const Json& j, const ContextPtr& base_ctx);

}  // namespace mucurve
