#pragma once

#include <string>
#include <string_view>

#include "ncis/algebra.hpp"

namespace ncis {

// Expression grammar:
//   expr   := term (("+"|"-") term)*
//   term   := [rational] ("*" factor)* | factor ("*" factor)*
//   factor := ("u"|"v") ["^" signed-integer]
// Whitespace is insignificant; "1" is the unit; exponents expand to letters.

/// Throws ParseError (with byte position) on malformed input.
AlgebraElement parse(std::string_view text);

/// Canonical rendering: terms sorted by (word length, letter order), letter
/// runs collapsed into powers. parse(render(e)) == e.
std::string render(const AlgebraElement& e);
std::string render(const Word& w);

}  // namespace ncis
