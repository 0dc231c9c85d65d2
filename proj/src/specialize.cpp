#include "ncis/specialize.hpp"

#include "ncis/dbracket.hpp"
#include "ncis/errors.hpp"
#include "ncis/parse.hpp"

namespace ncis {

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0) throw DomainError("0 has no negative powers");
  Rational acc(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  for (int i = 0; i < (e > 0 ? e : -e); ++i) acc *= b;
  return acc;
}

std::string render_uv_monomial(int m, int n) {
  std::string out;
  if (m != 0) out += m == 1 ? "u" : "u^" + std::to_string(m);
  if (n != 0) {
    if (!out.empty()) out += "*";
    out += n == 1 ? "v" : "v^" + std::to_string(n);
  }
  return out;
}

}  // namespace

Rational CommutativeLaurent::coefficient(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommutativeLaurent::add_term(int m, int n, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommutativeLaurent& CommutativeLaurent::operator+=(const CommutativeLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

CommutativeLaurent& CommutativeLaurent::operator-=(const CommutativeLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

CommutativeLaurent operator*(const CommutativeLaurent& a, const CommutativeLaurent& b) {
  CommutativeLaurent out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

CommutativeLaurent abelianize(const AlgebraElement& e) {
  CommutativeLaurent out;
  for (const auto& [w, c] : e.terms()) {
    int m = 0, n = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Letter x = w.letter(i);
      (u_family(x) ? m : n) += letter_exponent(x);
    }
    out.add_term(m, n, c);
  }
  return out;
}

namespace {

CommutativeLaurent d_u(const CommutativeLaurent& f) {
  CommutativeLaurent out;
  for (const auto& [k, c] : f.terms())
    out.add_term(k.first - 1, k.second, c * k.first);
  return out;
}

CommutativeLaurent d_v(const CommutativeLaurent& f) {
  CommutativeLaurent out;
  for (const auto& [k, c] : f.terms())
    out.add_term(k.first, k.second - 1, c * k.second);
  return out;
}

}  // namespace

CommutativeLaurent classical_poisson(const CommutativeLaurent& f,
                                     const CommutativeLaurent& g) {
  CommutativeLaurent uv;
  uv.add_term(1, 1, 1);
  return uv * (d_v(f) * d_u(g) - d_u(f) * d_v(g));
}

std::string render(const CommutativeLaurent& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono = render_uv_monomial(k.first, k.second);
    if (mono.empty())
      out += render(mag);
    else {
      if (mag != 1) out += render(mag) + "*";
      out += mono;
    }
  }
  return out;
}

QLaurent QLaurent::q_power(int k, const Rational& c) {
  QLaurent out;
  out.add_term(k, c);
  return out;
}

void QLaurent::add_term(int k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational QLaurent::at(const Rational& q0) const {
  Rational out(0);
  for (const auto& [k, c] : terms_) out += c * rational_pow(q0, k);
  return out;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
  QLaurent out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term(ka + kb, ca * cb);
  return out;
}

void QWeylElement::add_term(int m, int n, const QLaurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{m, n}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QWeylElement& QWeylElement::operator+=(const QWeylElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

QWeylElement& QWeylElement::operator-=(const QWeylElement& o) {
  for (const auto& [k, c] : o.terms_) {
    QLaurent neg;
    neg -= c;
    add_term(k.first, k.second, neg);
  }
  return *this;
}

QWeylElement qweyl_normal_form(const AlgebraElement& e) {
  QWeylElement out;
  for (const auto& [w, c] : e.terms()) {
    // moving every u-letter left across the v-letters before it costs
    // q^{-eps*delta} per swap
    int m = 0, n = 0, k = 0, v_prefix = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Letter x = w.letter(i);
      int exp = letter_exponent(x);
      if (u_family(x)) {
        m += exp;
        k -= v_prefix * exp;
      } else {
        n += exp;
        v_prefix += exp;
      }
    }
    out.add_term(m, n, QLaurent::q_power(k, c));
  }
  return out;
}

QWeylElement qweyl_mul(const QWeylElement& a, const QWeylElement& b) {
  QWeylElement out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      QLaurent swap = QLaurent::q_power(-ka.second * kb.first);
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb * swap);
    }
  return out;
}

CommutativeLaurent qweyl_substitute(const QWeylElement& e, const Rational& q0) {
  CommutativeLaurent out;
  for (const auto& [k, c] : e.terms()) out.add_term(k.first, k.second, c.at(q0));
  return out;
}

std::string render(const QWeylElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    if (!first) out += " + ";
    first = false;
    std::string qpart;
    bool multi = c.terms().size() > 1;
    for (const auto& [qk, qc] : c.terms()) {
      if (!qpart.empty()) qpart += " + ";
      std::string qmono = qk == 0 ? "" : (qk == 1 ? "q" : "q^" + std::to_string(qk));
      if (qmono.empty())
        qpart += render(qc);
      else if (qc == 1)
        qpart += qmono;
      else
        qpart += render(qc) + "*" + qmono;
    }
    std::string mono = render_uv_monomial(k.first, k.second);
    if (mono.empty())
      out += multi ? "(" + qpart + ")" : qpart;
    else if (qpart == "1")
      out += mono;
    else
      out += (multi ? "(" + qpart + ")" : qpart) + "*" + mono;
  }
  return out;
}

CommutativeLaurent verify_flow_descends(const AlgebraElement& x,
                                        const AlgebraElement& y, const Rational& q0) {
  auto image = [&](const AlgebraElement& e) {
    return qweyl_substitute(qweyl_normal_form(e), q0);
  };
  if (!(image(x) == image(y)))
    throw DomainError("flow-descent precondition: x and y differ in the quotient");
  const AlgebraElement h = hamiltonian_h();
  return image(flow_derivative(h, x)) - image(flow_derivative(h, y));
}

}  // namespace ncis
