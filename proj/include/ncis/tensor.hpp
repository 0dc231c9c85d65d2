#pragma once

#include <map>
#include <utility>

#include "ncis/algebra.hpp"

namespace ncis {

/// Element of A (x) A: finite (Word, Word) -> coefficient map.
class TensorElement {
 public:
  using Key = std::pair<Word, Word>;
  using TermMap = std::map<Key, Rational>;

  TensorElement() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Word& a, const Word& b) const;

  void add_term(const Word& a, const Word& b, const Rational& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& c);
  TensorElement operator-() const;
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Rational& c, TensorElement a) { return a *= c; }

  bool operator==(const TensorElement&) const = default;

 private:
  TermMap terms_;
};

/// a (x) b with all cross terms.
TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b);

/// Componentwise algebra product on A (x) A: (a(x)b)(c(x)d) = ac (x) bd.
TensorElement tensor_mul(const TensorElement& s, const TensorElement& t);

/// Outer bimodule action x o (a(x)b) o y = xa (x) by.
TensorElement outer_action(const AlgebraElement& x, const TensorElement& t,
                           const AlgebraElement& y);

/// Inner bimodule action x o (a(x)b) o y = ay (x) xb.
TensorElement inner_action(const AlgebraElement& x, const TensorElement& t,
                           const AlgebraElement& y);

/// (a (x) b)° = b (x) a.
TensorElement opposite(const TensorElement& t);

/// Multiplication map mu(a (x) b) = ab, extended linearly.
AlgebraElement mu(const TensorElement& t);

/// "(x)" separates the slots, e.g. "-v*u (x) 1".
std::string render(const TensorElement& t);

}  // namespace ncis
