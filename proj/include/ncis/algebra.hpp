#pragma once

#include <map>

#include "ncis/rational.hpp"
#include "ncis/word.hpp"

namespace ncis {

/// Element of the group algebra Q<u^±1, v^±1>: finite Word -> coefficient map.
/// No zero coefficient is ever stored; all keys are freely reduced.
class AlgebraElement {
 public:
  using TermMap = std::map<Word, Rational>;

  AlgebraElement() = default;
  AlgebraElement(int n) { add_term(Word(), Rational(n)); }
  AlgebraElement(const Rational& c) { add_term(Word(), c); }
  AlgebraElement(const Word& w) { add_term(w, Rational(1)); }
  AlgebraElement(Letter x) { add_term(Word::reduce({x}), Rational(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::size_t max_word_length() const;
  Rational coefficient(const Word& w) const;

  /// Accumulates c at w, erasing the term if the sum vanishes.
  void add_term(const Word& w, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rational& c);
  AlgebraElement operator-() const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }

  /// exponent >= 0; general elements have no inverse in the algebra.
  AlgebraElement pow(int exponent) const;

  bool operator==(const AlgebraElement&) const = default;

 private:
  TermMap terms_;
};

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b - b * a;
}

/// h = u + v + u^-1 + v^-1 + u^-1 v^-1
AlgebraElement hamiltonian_h();

/// c = u v u^-1 v^-1, the group commutator.
AlgebraElement casimir_c();

/// c^-1 = v u v^-1 u^-1
AlgebraElement casimir_c_inverse();

}  // namespace ncis
