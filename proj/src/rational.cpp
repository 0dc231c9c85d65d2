#include "ncis/rational.hpp"

#include "ncis/errors.hpp"

namespace ncis {

std::string render(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

Rational parse_rational(std::string_view text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("malformed rational: " + std::string(text), 0);
  }
}

}  // namespace ncis
