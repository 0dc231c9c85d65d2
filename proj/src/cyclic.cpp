#include "ncis/cyclic.hpp"

#include <nlohmann/json.hpp>

#include "ncis/parse.hpp"

namespace ncis {

std::size_t min_rotation_index(std::string_view s) {
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    char a = s[(i + k) % n], b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b)
      i = i + k + 1;
    else
      j = j + k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::string cyclic_canonical_bytes(std::string_view reduced) {
  std::size_t lo = 0, hi = reduced.size();
  while (hi - lo >= 2 &&
         mutually_inverse(Letter(reduced[lo]), Letter(reduced[hi - 1]))) {
    ++lo;
    --hi;
  }
  std::string_view core = reduced.substr(lo, hi - lo);
  std::size_t r = min_rotation_index(core);
  std::string out;
  out.reserve(core.size());
  out.append(core.substr(r));
  out.append(core.substr(0, r));
  return out;
}

CyclicWord CyclicWord::canonical(const Word& w) {
  return CyclicWord(cyclic_canonical_bytes(w.bytes()));
}

CyclicWord CyclicWord::from_canonical_bytes(std::string bytes) {
  return CyclicWord(std::move(bytes));
}

Rational CyclicElement::coefficient(const CyclicWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CyclicElement::add_term(const CyclicWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CyclicElement& CyclicElement::operator+=(const CyclicElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CyclicElement& CyclicElement::operator-=(const CyclicElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

CyclicElement& CyclicElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

CyclicElement CyclicElement::operator-() const {
  CyclicElement out = *this;
  for (auto& [w, coef] : out.terms_) coef = -coef;
  return out;
}

CyclicElement project(const AlgebraElement& e) {
  CyclicElement out;
  for (const auto& [w, c] : e.terms()) out.add_term(CyclicWord::canonical(w), c);
  return out;
}

std::string render(const CyclicWord& w) {
  return render(Word::from_reduced_bytes(std::string(w.bytes())));
}

std::string render(const CyclicElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (w.empty())
      out += render(mag);
    else {
      if (mag != 1) out += render(mag) + "*";
      out += render(w);
    }
  }
  return out;
}

std::string to_json_string(const CyclicElement& e) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, c] : e.terms()) j[render(w)] = render(c);
  return j.dump();
}

}  // namespace ncis
