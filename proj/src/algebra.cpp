#include "ncis/algebra.hpp"

#include "ncis/errors.hpp"

namespace ncis {

std::size_t AlgebraElement::max_word_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

Rational AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [w, coef] : out.terms_) coef = -coef;
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  return out;
}

AlgebraElement AlgebraElement::pow(int exponent) const {
  if (exponent < 0)
    throw DomainError("general elements are not invertible");
  AlgebraElement acc(1);
  for (int i = 0; i < exponent; ++i) acc = acc * *this;
  return acc;
}

AlgebraElement hamiltonian_h() {
  AlgebraElement h;
  h.add_term(Word::reduce({Letter::u}), 1);
  h.add_term(Word::reduce({Letter::v}), 1);
  h.add_term(Word::reduce({Letter::uinv}), 1);
  h.add_term(Word::reduce({Letter::vinv}), 1);
  h.add_term(Word::reduce({Letter::uinv, Letter::vinv}), 1);
  return h;
}

AlgebraElement casimir_c() {
  return AlgebraElement(
      Word::reduce({Letter::u, Letter::v, Letter::uinv, Letter::vinv}));
}

AlgebraElement casimir_c_inverse() {
  return AlgebraElement(
      Word::reduce({Letter::v, Letter::u, Letter::vinv, Letter::uinv}));
}

}  // namespace ncis
