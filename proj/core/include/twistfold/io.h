// Canonical text rendering for the polynomial types.  One fixed grammar so
// output is byte-stable: terms ascending in the map order of each type,
// coefficient always printed first, then variables with caret exponents and
// '*' separators, zero-exponent variables omitted, terms joined by " + ",
// the zero polynomial rendered as "0".  Example: "3*a^2*q^-1*t^4".
#pragma once

#include "twistfold/qsymbols.h"

#include <string>

namespace twistfold {

// Renders one monomial: coefficient followed by the named variables whose
// exponents are nonzero, e.g. render_term(-2, {{"q",3},{"t",-1}}) ==
// "-2*q^3*t^-1".
std::string render_term(
    const Int& coeff,
    const std::vector<std::pair<const char*, int>>& vars);

}  // namespace twistfold
