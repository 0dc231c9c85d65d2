#include "ncis/tensor.hpp"

#include "ncis/parse.hpp"

namespace ncis {

Rational TensorElement::coefficient(const Word& a, const Word& b) const {
  auto it = terms_.find(Key(a, b));
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(const Word& a, const Word& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement out = *this;
  for (auto& [k, coef] : out.terms_) coef = -coef;
  return out;
}

TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, ca * cb);
  return out;
}

TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) {
  TensorElement out;
  for (const auto& [ks, cs] : s.terms())
    for (const auto& [kt, ct] : t.terms())
      out.add_term(ks.first * kt.first, ks.second * kt.second, cs * ct);
  return out;
}

TensorElement outer_action(const AlgebraElement& x, const TensorElement& t,
                           const AlgebraElement& y) {
  return tensor_mul(tensor_mul(tensor(x, 1), t), tensor(1, y));
}

TensorElement inner_action(const AlgebraElement& x, const TensorElement& t,
                           const AlgebraElement& y) {
  return tensor_mul(tensor_mul(tensor(1, x), t), tensor(y, 1));
}

TensorElement opposite(const TensorElement& t) {
  TensorElement out;
  for (const auto& [k, c] : t.terms()) out.add_term(k.second, k.first, c);
  return out;
}

AlgebraElement mu(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) out.add_term(k.first * k.second, c);
  return out;
}

std::string render(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : t.terms()) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (mag != 1) out += render(mag) + "*";
    out += render(k.first) + " (x) " + render(k.second);
  }
  return out;
}

}  // namespace ncis
