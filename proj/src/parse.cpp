#include "ncis/parse.hpp"

#include <cctype>
#include <vector>

#include "ncis/errors.hpp"

namespace ncis {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  AlgebraElement run() {
    AlgebraElement out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  AlgebraElement expr() {
    AlgebraElement out;
    skip_ws();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    out += term(negative);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      take();
      out += term(c == '-');
    }
    return out;
  }

  AlgebraElement term(bool negative) {
    skip_ws();
    Rational coef = negative ? -1 : 1;
    bool have_factor = false;
    WordBuilder word;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef *= rational();
      have_factor = true;
    } else {
      factor(word);
      have_factor = true;
    }
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      take();
      skip_ws();
      factor(word);
    }
    if (!have_factor) fail("expected a term");
    AlgebraElement out;
    out.add_term(word.take(), coef);
    return out;
  }

  Rational rational() {
    Integer num = integer();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      std::size_t at = pos_;
      Integer den = integer();
      if (den == 0) fail_at("zero denominator", at);
      return Rational(num, den);
    }
    return Rational(num);
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) take();
    if (pos_ == start) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void factor(WordBuilder& word) {
    skip_ws();
    char c = peek();
    Letter base;
    if (c == 'u')
      base = Letter::u;
    else if (c == 'v')
      base = Letter::v;
    else if (c == '\0')
      fail("unexpected end of input");
    else if (std::isdigit(static_cast<unsigned char>(c)))
      fail("numeric coefficient must come first in a term");
    else
      fail(std::string("unknown symbol '") + c + "'");
    take();
    long long exp = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      bool neg = false;
      if (peek() == '+' || peek() == '-') neg = take() == '-';
      Integer e = integer();
      if (e > 64) fail("exponent too large");
      exp = static_cast<long long>(e);
      if (neg) exp = -exp;
    }
    Letter x = exp >= 0 ? base : inverse(base);
    for (long long i = 0; i < (exp >= 0 ? exp : -exp); ++i) word.push(x);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg + " at position " + std::to_string(at), at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_word_into(std::string& out, std::string_view bytes) {
  std::size_t i = 0;
  bool first = true;
  while (i < bytes.size()) {
    std::size_t j = i;
    while (j < bytes.size() && bytes[j] == bytes[i]) ++j;
    std::size_t run = j - i;
    Letter x = Letter(bytes[i]);
    if (!first) out += '*';
    first = false;
    out += u_family(x) ? 'u' : 'v';
    long long e = static_cast<long long>(run) * letter_exponent(x);
    if (e != 1) out += '^' + std::to_string(e);
    i = j;
  }
}

}  // namespace

AlgebraElement parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  render_word_into(out, w.bytes());
  return out;
}

std::string render(const AlgebraElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (w.empty())
      out += render(mag);
    else {
      if (mag != 1) out += render(mag) + "*";
      render_word_into(out, w.bytes());
    }
  }
  return out;
}

}  // namespace ncis
