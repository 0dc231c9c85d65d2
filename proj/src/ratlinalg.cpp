#include "ncis/ratlinalg.hpp"

#include <algorithm>
#include <deque>

namespace ncis {

namespace {

const CyclicWord& leading(const CyclicElement& v) { return v.terms().begin()->first; }

void axpy(std::vector<Rational>& acc, const Rational& a,
          const std::vector<Rational>& x) {
  if (acc.size() < x.size()) acc.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) acc[i] += a * x[i];
}

}  // namespace

bool RowReducer::insert(const CyclicElement& v) {
  CyclicElement rem = v;
  std::vector<Rational> combo(inserted_ + 1, Rational(0));
  combo[inserted_] = 1;
  ++inserted_;

  auto row_it = rows_.begin();
  while (!rem.is_zero()) {
    const CyclicWord& w = leading(rem);
    row_it = std::lower_bound(
        row_it, rows_.end(), w,
        [](const Row& r, const CyclicWord& key) { return leading(r.vec) < key; });
    if (row_it == rows_.end() || leading(row_it->vec) != w) break;
    Rational a = rem.terms().begin()->second;
    rem -= a * row_it->vec;
    axpy(combo, -a, row_it->combo);
  }
  if (rem.is_zero()) return false;

  Rational lead = rem.terms().begin()->second;
  rem *= Rational(1) / lead;
  for (auto& c : combo) c /= lead;
  rows_.insert(row_it, Row{std::move(rem), std::move(combo)});
  return true;
}

std::optional<std::vector<Rational>> RowReducer::coordinates(
    const CyclicElement& target) const {
  CyclicElement rem = target;
  std::vector<Rational> coords(inserted_, Rational(0));
  auto row_it = rows_.begin();
  while (!rem.is_zero()) {
    const CyclicWord& w = leading(rem);
    row_it = std::lower_bound(
        row_it, rows_.end(), w,
        [](const Row& r, const CyclicWord& key) { return leading(r.vec) < key; });
    if (row_it == rows_.end() || leading(row_it->vec) != w) return std::nullopt;
    Rational a = rem.terms().begin()->second;
    rem -= a * row_it->vec;
    axpy(coords, a, row_it->combo);
  }
  coords.resize(inserted_, Rational(0));
  return coords;
}

SpanResult span_membership(const CyclicElement& target,
                           const std::vector<CyclicElement>& basis) {
  RowReducer red;
  for (const auto& b : basis) red.insert(b);
  SpanResult out;
  if (auto coords = red.coordinates(target)) {
    out.member = true;
    out.coordinates = std::move(*coords);
    out.coordinates.resize(basis.size(), Rational(0));
  }
  return out;
}

std::size_t rank(const std::vector<CyclicElement>& vectors) {
  RowReducer red;
  for (const auto& v : vectors) red.insert(v);
  return red.rank();
}

namespace {

std::string runs_to_label(const std::vector<std::pair<int, int>>& runs) {
  if (runs.empty()) return "1";
  std::string out;
  for (const auto& [sym, count] : runs) {
    if (!out.empty()) out += "*";
    if (sym == 0)
      out += count == 1 ? "h" : "h^" + std::to_string(count);
    else if (sym == 1)
      out += count == 1 ? "c" : "c^" + std::to_string(count);
    else
      out += "c^-" + std::to_string(count);
  }
  return out;
}

}  // namespace

std::vector<HcBasisVector> enumerate_hc_basis_labeled(int max_degree) {
  const AlgebraElement gens[] = {hamiltonian_h(), casimir_c(), casimir_c_inverse()};
  const int weights[] = {1, 4, 4};
  const int inverse_of[] = {-1, 2, 1};

  struct Node {
    AlgebraElement product;
    std::vector<std::pair<int, int>> runs;  // (symbol, count)
    int weight = 0;
  };

  std::vector<HcBasisVector> basis;
  RowReducer red;
  auto consider = [&](const Node& n) {
    if (static_cast<int>(n.product.max_word_length()) > max_degree) return;
    CyclicElement image = project(n.product);
    if (red.insert(image)) basis.push_back({runs_to_label(n.runs), std::move(image)});
  };

  std::deque<Node> queue;
  queue.push_back(Node{AlgebraElement(1), {}, 0});
  consider(queue.front());

  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    int last = n.runs.empty() ? -1 : n.runs.back().first;
    for (int s = 0; s < 3; ++s) {
      if (last >= 0 && inverse_of[last] == s) continue;  // c c^-1 collapses
      if (n.weight + weights[s] > max_degree) continue;
      Node next;
      next.product = n.product * gens[s];
      next.runs = n.runs;
      if (last == s)
        next.runs.back().second += 1;
      else
        next.runs.emplace_back(s, 1);
      next.weight = n.weight + weights[s];
      consider(next);
      queue.push_back(std::move(next));
    }
  }
  return basis;
}

std::vector<CyclicElement> enumerate_hc_basis(int max_degree) {
  std::vector<CyclicElement> out;
  for (auto& b : enumerate_hc_basis_labeled(max_degree)) out.push_back(std::move(b.element));
  return out;
}

}  // namespace ncis
