#pragma once

#include <string>

#include "eqcoh/reps.hpp"

namespace eqcoh {

// expr := [sign] term (('+'|'-') term)*
// term := [uint] atom
// atom := uint | 'L' uint | 's' | 'rho' | 'phi(' uint ')' | 'w(' uint ')'
// Whitespace is ignored. 'rho' is the real regular representation.
// Throws ParseError carrying the offending offset in the input.
VirtualRep parse_degree(const std::string& text, int n);

}  // namespace eqcoh
