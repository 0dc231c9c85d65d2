#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ncis {

// Exact rational scalars. cpp_rational keeps canonical lowest-terms form with a
// positive denominator, which makes "equals zero" decidable everywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// "0", "-1", "3/2" — integers drop the denominator.
std::string render(const Rational& q);

/// Inverse of render(); accepts "n" and "n/d". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace ncis
