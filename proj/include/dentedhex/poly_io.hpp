#pragma once

#include <string>
#include <string_view>

#include "dentedhex/laurent_poly.hpp"

namespace dentedhex {

// Text form:
//   poly    := term (" + " term | " - " term)*
//   term    := coeff | coeff "*" factors | factors
//   coeff   := integer | integer "/" positive-integer
//   factors := factor ("*" factor)*
//   factor  := ("q" | "X" | "Y") ["^" signed-integer]
// format() emits terms in ascending canonical order with factors as X, Y, q
// and drops unit coefficients except on the constant term. The zero
// polynomial is "0".

std::string format(const LaurentPoly& p);

/// Throws ParseError carrying the offending character offset.
LaurentPoly parse_poly(std::string_view text);

/// {"terms":[{"c":"num/den","q":int,"X":int,"Y":int}, ...]} in canonical order.
std::string to_json(const LaurentPoly& p);
LaurentPoly from_json(std::string_view json_text);

}  // namespace dentedhex
