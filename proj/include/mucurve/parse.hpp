#pragma once

#include <string>

#include "mucurve/poly.hpp"

namespace mucurve {

// Recursive-descent parser for polynomial expressions in one variable:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*'? factor)*        (implicit multiplication: 2t^3)
//   factor := base ('^' nat)?
//   base   := rational | var | '(' expr ')' | '-' base
// Rationals are exact ("13/12"). Throws SyntaxError (with byte offset) and
// WrongVariable for identifiers other than var.
Poly parse_poly(const std::string& text, const ContextPtr& ctx, const std::string& var = "t");

// Exact rational scalar ("-1/12"); reuses the polynomial grammar and requires
// a constant result.
FieldElem parse_scalar(const std::string& text, const ContextPtr& ctx);

// Canonical form: descending degree, exact coefficients; print-then-parse is a
// fixed point.
std::string print_poly(const Poly& f, const std::string& var = "t");

// Field specification grammar: `q` | `fp:<prime>` | `fp:<prime>/<monic poly in x>`.
ContextPtr parse_field_spec(const std::string& spec);

}  // namespace mucurve
