#pragma once

#include <string_view>

#include "cellalg/polynomial.hpp"

namespace cellalg {

/// Parses a polynomial expression over `ring`.
///
///   expr     := sign? term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' natural)?
///   atom     := variable | rational | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// Whitespace is ignored and juxtaposition is not multiplication.  Over F_p a
/// rational literal a/b means a * b^-1.  Throws ParseError (line 0, 1-based
/// column) on unknown variables, malformed syntax, or a denominator that
/// vanishes in the field.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace cellalg
