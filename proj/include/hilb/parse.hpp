#ifndef HILB_PARSE_HPP
#define HILB_PARSE_HPP

#include <string>

#include "hilb/polyalg.hpp"

namespace hilb {

// Monomial-sum syntax: terms joined by +/-, factors joined by '*' or
// juxtaposition.  Factors are integer/rational/decimal literals (exact), the
// imaginary unit 'i', or variables z1..z9 with optional integer powers.
// Examples: "z1^3+z2^3+z1*z2*z3", "0.5*z1 + (1/2)*z2", "2z1 - i*z2^2".
// Negative exponents are rejected unless allow_negative_exponents is set.
LaurentPoly parse_poly(const std::string& text, bool allow_negative_exponents = false);

// Deterministic inverse of parse_poly on exact polynomials:
// parse_poly(render_poly(f)) == f.
std::string render_poly(const LaurentPoly& f);

} // namespace hilb

#endif
