#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace ncis {

/// Generators of the free group <u,v> and their inverses. The numeric values
/// give the fixed total order u < u^-1 < v < v^-1 used by every canonical form.
enum class Letter : unsigned char { u = 0, uinv = 1, v = 2, vinv = 3 };

constexpr Letter inverse(Letter x) {
  return Letter(static_cast<unsigned char>(x) ^ 1u);
}

constexpr bool mutually_inverse(Letter a, Letter b) { return a == inverse(b); }

/// true for u and u^-1.
constexpr bool u_family(Letter x) { return static_cast<unsigned char>(x) < 2; }

/// +1 for u and v, -1 for the inverses.
constexpr int letter_exponent(Letter x) {
  return (static_cast<unsigned char>(x) & 1u) ? -1 : +1;
}

/// Freely reduced word in <u,v>; the empty word is the group identity.
/// Instances are reduced by construction and immutable afterwards.
class Word {
 public:
  Word() = default;

  /// Cancels mutually inverse neighbours until no pair remains. The result is
  /// independent of cancellation order (free reduction is confluent).
  static Word reduce(std::span<const Letter> letters);
  static Word reduce(std::initializer_list<Letter> letters);

  /// Wraps bytes that are already known to be reduced (values 0..3).
  static Word from_reduced_bytes(std::string bytes);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter letter(std::size_t i) const { return Letter(letters_[i]); }

  /// Raw letter values 0..3, one byte each.
  std::string_view bytes() const { return letters_; }

  Word inverse() const;

  friend Word operator*(const Word& a, const Word& b);

  bool operator==(const Word&) const = default;

  /// Length first, then lexicographic by the fixed letter order.
  std::strong_ordering operator<=>(const Word& o) const {
    if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
    return letters_.compare(o.letters_) <=> 0;
  }

 private:
  explicit Word(std::string bytes) : letters_(std::move(bytes)) {}
  std::string letters_;
};

inline Word word_u() { return Word::reduce({Letter::u}); }
inline Word word_v() { return Word::reduce({Letter::v}); }

/// Push-based builder that keeps the buffer freely reduced at every step.
class WordBuilder {
 public:
  void push(Letter x) {
    if (!buf_.empty() && mutually_inverse(Letter(buf_.back()), x))
      buf_.pop_back();
    else
      buf_.push_back(static_cast<char>(x));
  }
  void append(std::string_view bytes) {
    for (char b : bytes) push(Letter(b));
  }
  void append(const Word& w) { append(w.bytes()); }
  const std::string& bytes() const { return buf_; }
  Word take() { return Word::from_reduced_bytes(std::move(buf_)); }
  void clear() { buf_.clear(); }

 private:
  std::string buf_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string_view>{}(w.bytes());
  }
};

}  // namespace ncis
