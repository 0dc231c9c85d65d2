#pragma once

#include <map>
#include <string>
#include <utility>

#include "ncis/algebra.hpp"

namespace ncis {

/// Commutative Laurent polynomial sum c_{mn} u^m v^n — the c = 1 quotient.
class CommutativeLaurent {
 public:
  using Key = std::pair<int, int>;  // (u exponent, v exponent)

  CommutativeLaurent() = default;
  CommutativeLaurent(const Rational& c) { add_term(0, 0, c); }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int m, int n) const;

  void add_term(int m, int n, const Rational& c);

  CommutativeLaurent& operator+=(const CommutativeLaurent& o);
  CommutativeLaurent& operator-=(const CommutativeLaurent& o);
  friend CommutativeLaurent operator+(CommutativeLaurent a, const CommutativeLaurent& b) {
    return a += b;
  }
  friend CommutativeLaurent operator-(CommutativeLaurent a, const CommutativeLaurent& b) {
    return a -= b;
  }
  friend CommutativeLaurent operator*(const CommutativeLaurent& a,
                                      const CommutativeLaurent& b);

  bool operator==(const CommutativeLaurent&) const = default;

 private:
  std::map<Key, Rational> terms_;
};

/// The abelianization homomorphism: each word goes to its net exponents.
CommutativeLaurent abelianize(const AlgebraElement& e);

/// {f,g} = uv (d_v f d_u g - d_u f d_v g), the bracket with {v,u} = uv.
CommutativeLaurent classical_poisson(const CommutativeLaurent& f,
                                     const CommutativeLaurent& g);

std::string render(const CommutativeLaurent& e);

/// Laurent polynomial in the formal central parameter q.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(const Rational& c) { add_term(0, c); }

  static QLaurent q_power(int k, const Rational& c = Rational(1));

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int k, const Rational& c);
  Rational at(const Rational& q0) const;  // exact evaluation

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);

  bool operator==(const QLaurent&) const = default;

 private:
  std::map<int, Rational> terms_;
};

/// Normal form sum c_{mn}(q) u^m v^n in the q-Weyl quotient uv = q vu.
class QWeylElement {
 public:
  using Key = std::pair<int, int>;

  QWeylElement() = default;

  const std::map<Key, QLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int m, int n, const QLaurent& c);

  QWeylElement& operator+=(const QWeylElement& o);
  QWeylElement& operator-=(const QWeylElement& o);
  friend QWeylElement operator+(QWeylElement a, const QWeylElement& b) { return a += b; }
  friend QWeylElement operator-(QWeylElement a, const QWeylElement& b) { return a -= b; }

  bool operator==(const QWeylElement&) const = default;

 private:
  std::map<Key, QLaurent> terms_;
};

/// The quotient homomorphism A -> q-Weyl algebra: each word picks up the
/// q power of its inversions and lands on u^m v^n.
QWeylElement qweyl_normal_form(const AlgebraElement& e);

/// Product in normal form: (u^m v^n)(u^m' v^n') = q^{-n m'} u^{m+m'} v^{n+n'}.
QWeylElement qweyl_mul(const QWeylElement& a, const QWeylElement& b);

/// Exact substitution q -> q0; with q0 = 1 this is the abelianization.
CommutativeLaurent qweyl_substitute(const QWeylElement& e, const Rational& q0);

std::string render(const QWeylElement& e);

/// Residual of the flow through the quotient: x and y must agree in the
/// quotient at q0 (e.g. y = x + p (c - q0) s); then so must their flows.
/// Throws DomainError when the precondition fails.
CommutativeLaurent verify_flow_descends(const AlgebraElement& x,
                                        const AlgebraElement& y, const Rational& q0);

}  // namespace ncis
