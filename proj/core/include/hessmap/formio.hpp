#pragma once

#include <string>
#include <string_view>

#include "hessmap/form.hpp"

namespace hessmap {

// Text syntax for polynomials, e.g.  "x^4 + 2*y^2*z^2 - 3/2*x*y*z^2".
//
//   polynomial := ['+'|'-'] term (('+'|'-') term)*
//   term       := coefficient ('*' factor)*  |  factor ('*' factor)*
//   factor     := variable ('^' exponent)?
//   coefficient:= digits ['/' digits]
//   variable   := identifier drawn from the ring's variable list
//
// The '*' between every pair of adjacent factors (and after a coefficient) is
// mandatory; juxtaposition like "2x" or "xy" is rejected.  Whitespace may
// appear between tokens.  Errors carry 1-based character positions:
// SyntaxError for malformed input, UnknownVariable for an identifier that is
// not one of the ring's variables.
MultiPoly parse_polynomial(std::string_view text, const Ring& ring);

// parse_polynomial plus the homogeneity certificate (throws NotHomogeneous).
Form parse_form(std::string_view text, const Ring& ring);

// Canonical rendering: terms in descending graded-lex order, " + " / " - "
// separators, no "1*" on unit coefficients, "^k" only for k >= 2.  Parsing
// the output reproduces the input exactly.
std::string print_polynomial(const MultiPoly& p);
std::string print_form(const Form& f);

} // namespace hessmap
