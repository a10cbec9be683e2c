#pragma once

#include "koszul/polynomial.hpp"

#include <string>
#include <string_view>

namespace koszul {

/// Parses an ASCII polynomial expression over the declared variables:
/// integer literals, variables, + - * ^ and parentheses. Like terms are
/// collected and coefficients reduced mod p; no reduction modulo relations.
/// Errors carry the 1-based column of the offending character.
Polynomial canonical_poly(std::string_view text, const PolyRing& ring);

}  // namespace koszul
