#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ncis/algebra.hpp"

namespace ncis {

/// Canonical representative of a conjugacy/cyclic class: cyclically reduced
/// (freely reduced and the first/last letters are not mutually inverse) in the
/// lexicographically least rotation under the fixed letter order.
class CyclicWord {
 public:
  CyclicWord() = default;

  /// Conjugate-cancels the ends to a fixpoint, then picks the least rotation.
  static CyclicWord canonical(const Word& w);
  static CyclicWord from_canonical_bytes(std::string bytes);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter letter(std::size_t i) const { return Letter(letters_[i]); }
  std::string_view bytes() const { return letters_; }

  bool operator==(const CyclicWord&) const = default;
  std::strong_ordering operator<=>(const CyclicWord& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_.compare(o.letters_) <=> 0;
  }

 private:
  explicit CyclicWord(std::string b) : letters_(std::move(b)) {}
  std::string letters_;
};

/// Index of the lexicographically least rotation (two-pointer, linear time).
std::size_t min_rotation_index(std::string_view s);

/// Byte-level canonicalization used by the fused bracket kernels: input is a
/// freely reduced letter string, output the canonical cyclic representative.
std::string cyclic_canonical_bytes(std::string_view reduced);

inline CyclicWord cyclic_canonical(const Word& w) { return CyclicWord::canonical(w); }

/// Element of the cyclic space A/[A,A].
class CyclicElement {
 public:
  using TermMap = std::map<CyclicWord, Rational>;

  CyclicElement() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const CyclicWord& w) const;

  void add_term(const CyclicWord& w, const Rational& c);

  CyclicElement& operator+=(const CyclicElement& o);
  CyclicElement& operator-=(const CyclicElement& o);
  CyclicElement& operator*=(const Rational& c);
  CyclicElement operator-() const;
  friend CyclicElement operator+(CyclicElement a, const CyclicElement& b) { return a += b; }
  friend CyclicElement operator-(CyclicElement a, const CyclicElement& b) { return a -= b; }
  friend CyclicElement operator*(const Rational& c, CyclicElement a) { return a *= c; }

  bool operator==(const CyclicElement&) const = default;

 private:
  TermMap terms_;
};

/// The trace projection pi: A -> A/[A,A].
CyclicElement project(const AlgebraElement& e);

std::string render(const CyclicWord& w);
std::string render(const CyclicElement& e);

/// JSON object mapping canonical word strings to rational strings ("3/2").
std::string to_json_string(const CyclicElement& e);

}  // namespace ncis
