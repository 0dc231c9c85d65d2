#include "ncis/dbracket.hpp"

#include <array>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncis/config.hpp"
#include "ncis/errors.hpp"
#include "ncis/parse.hpp"

namespace ncis {

namespace {

std::array<std::array<TensorElement, 4>, 4> build_generator_table() {
  std::array<std::array<TensorElement, 4>, 4> t;
  auto at = [&](Letter a, Letter b) -> TensorElement& {
    return t[static_cast<int>(a)][static_cast<int>(b)];
  };
  const Word wu = Word::reduce({Letter::u});
  const Word wv = Word::reduce({Letter::v});

  // defining entries on the positive letters
  at(Letter::u, Letter::v).add_term(wv * wu, Word(), -1);  // -vu (x) 1
  at(Letter::v, Letter::u).add_term(wu * wv, Word(), 1);   //  uv (x) 1
  // <<u,u>> = <<v,v>> = 0 already

  auto one = AlgebraElement(1);
  // first-argument inverses, forced by <<x^-1 x (x) b>> = <<1 (x) b>> = 0:
  //   <<x^-1 (x) b>> = -(1 (x) x^-1) <<x (x) b>> (x^-1 (x) 1)
  for (Letter x : {Letter::u, Letter::v}) {
    AlgebraElement xi{inverse(x)};
    for (Letter b : {Letter::u, Letter::v})
      at(inverse(x), b) =
          -tensor_mul(tensor_mul(tensor(one, xi), at(x, b)), tensor(xi, one));
  }
  // second-argument inverses, forced by <<a (x) y y^-1>> = <<a (x) 1>> = 0:
  //   <<a (x) y^-1>> = -(y^-1 (x) 1) <<a (x) y>> (1 (x) y^-1)
  for (Letter a : {Letter::u, Letter::uinv, Letter::v, Letter::vinv}) {
    for (Letter y : {Letter::u, Letter::v}) {
      AlgebraElement yi{inverse(y)};
      at(a, inverse(y)) =
          -tensor_mul(tensor_mul(tensor(yi, one), at(a, y)), tensor(one, yi));
    }
  }
  return t;
}

// The explicit double-sum formula on a pair of reduced monomials:
// for letters a_i, b_j with table entry sum_s s' (x) s'':
//   first  = b_1..b_{j-1} * s' * a_{i+1}..a_k
//   second = a_1..a_{i-1} * s'' * b_{j+1}..b_m
// Scratch builders are reused across calls to keep the hot loop allocation-free.
struct Scratch {
  WordBuilder first, second, combined;
};

template <class Emit>
void expand_pair(const Word& wa, const Word& wb, Scratch& sc, Emit&& emit) {
  std::string_view ab = wa.bytes(), bb = wb.bytes();
  for (std::size_t i = 0; i < ab.size(); ++i) {
    for (std::size_t j = 0; j < bb.size(); ++j) {
      const TensorElement& entry = generator_bracket(Letter(ab[i]), Letter(bb[j]));
      for (const auto& [slots, q] : entry.terms()) {
        sc.first.clear();
        sc.second.clear();
        sc.first.append(bb.substr(0, j));
        sc.first.append(slots.first.bytes());
        sc.first.append(ab.substr(i + 1));
        sc.second.append(ab.substr(0, i));
        sc.second.append(slots.second.bytes());
        sc.second.append(bb.substr(j + 1));
        emit(sc.first.bytes(), sc.second.bytes(), q);
      }
    }
  }
}

using TermPtr = const std::pair<const Word, Rational>*;

std::vector<TermPtr> term_ptrs(const AlgebraElement& e) {
  std::vector<TermPtr> out;
  out.reserve(e.term_count());
  for (const auto& t : e.terms()) out.push_back(&t);
  return out;
}

// Accumulate over all term pairs; the Fold decides what gets accumulated
// (tensor slot pairs, mu words or canonical cyclic words).
template <class Acc, class Fold>
void accumulate_pairs_omp(const AlgebraElement& a, const AlgebraElement& b, Acc& out,
                          Fold&& fold) {
  const auto ta = term_ptrs(a), tb = term_ptrs(b);
  const long total = static_cast<long>(ta.size() * tb.size());
  if (total == 0) return;
#pragma omp parallel
  {
    Acc local;
    Scratch sc;
    long pairs_done = 0;
#pragma omp for schedule(dynamic, 8) nowait
    for (long idx = 0; idx < total; ++idx) {
      const auto& [wa, ca] = *ta[static_cast<std::size_t>(idx) / tb.size()];
      const auto& [wb, cb] = *tb[static_cast<std::size_t>(idx) % tb.size()];
      const Rational cc = ca * cb;
      expand_pair(wa, wb, sc,
                  [&](std::string_view f, std::string_view s, const Rational& q) {
                    fold(local, sc, f, s, q * cc);
                  });
      if ((++pairs_done & 0x3ff) == 0) check_term_guard(local.size());
    }
#pragma omp critical
    {
      for (auto& [k, v] : local) {
        auto [it, inserted] = out.try_emplace(k, v);
        if (!inserted) it->second += v;
      }
    }
  }
}

template <class Acc, class Fold>
void accumulate_pairs_serial(const AlgebraElement& a, const AlgebraElement& b, Acc& out,
                             Fold&& fold) {
  Scratch sc;
  long pairs_done = 0;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      const Rational cc = ca * cb;
      expand_pair(wa, wb, sc,
                  [&](std::string_view f, std::string_view s, const Rational& q) {
                    fold(out, sc, f, s, q * cc);
                  });
      if ((++pairs_done & 0x3ff) == 0) check_term_guard(out.size());
    }
  }
}

struct PairKeyHash {
  std::size_t operator()(const std::pair<std::string, std::string>& k) const {
    std::size_t h1 = std::hash<std::string>{}(k.first);
    std::size_t h2 = std::hash<std::string>{}(k.second);
    return h1 ^ (h2 * 0x9e3779b97f4a7c15ull + (h1 << 6));
  }
};

using TensorAcc =
    std::unordered_map<std::pair<std::string, std::string>, Rational, PairKeyHash>;
using WordAcc = std::unordered_map<std::string, Rational>;

void fold_tensor(TensorAcc& acc, Scratch&, std::string_view f, std::string_view s,
                 const Rational& q) {
  auto [it, inserted] = acc.try_emplace({std::string(f), std::string(s)}, q);
  if (!inserted) it->second += q;
}

void fold_mu(WordAcc& acc, Scratch& sc, std::string_view f, std::string_view s,
             const Rational& q) {
  sc.combined.clear();
  sc.combined.append(f);
  sc.combined.append(s);
  auto [it, inserted] = acc.try_emplace(sc.combined.bytes(), q);
  if (!inserted) it->second += q;
}

void fold_projected(WordAcc& acc, Scratch& sc, std::string_view f, std::string_view s,
                    const Rational& q) {
  sc.combined.clear();
  sc.combined.append(f);
  sc.combined.append(s);
  auto [it, inserted] = acc.try_emplace(cyclic_canonical_bytes(sc.combined.bytes()), q);
  if (!inserted) it->second += q;
}

TensorElement tensor_from_acc(const TensorAcc& acc) {
  TensorElement out;
  for (const auto& [k, v] : acc)
    out.add_term(Word::from_reduced_bytes(k.first), Word::from_reduced_bytes(k.second),
                 v);
  return out;
}

AlgebraElement algebra_from_acc(const WordAcc& acc) {
  AlgebraElement out;
  for (const auto& [k, v] : acc) out.add_term(Word::from_reduced_bytes(k), v);
  return out;
}

CyclicElement cyclic_from_acc(const WordAcc& acc) {
  CyclicElement out;
  for (const auto& [k, v] : acc) out.add_term(CyclicWord::from_canonical_bytes(k), v);
  return out;
}

}  // namespace

const TensorElement& generator_bracket(Letter a, Letter b) {
  static const auto table = build_generator_table();
  return table[static_cast<int>(a)][static_cast<int>(b)];
}

TensorElement double_bracket(const AlgebraElement& a, const AlgebraElement& b) {
  TensorAcc acc;
  accumulate_pairs_omp(a, b, acc, fold_tensor);
  return tensor_from_acc(acc);
}

TensorElement double_bracket_serial(const AlgebraElement& a, const AlgebraElement& b) {
  TensorAcc acc;
  accumulate_pairs_serial(a, b, acc, fold_tensor);
  return tensor_from_acc(acc);
}

AlgebraElement loday_bracket(const AlgebraElement& a, const AlgebraElement& b) {
  WordAcc acc;
  accumulate_pairs_omp(a, b, acc, fold_mu);
  return algebra_from_acc(acc);
}

AlgebraElement loday_bracket_serial(const AlgebraElement& a, const AlgebraElement& b) {
  WordAcc acc;
  accumulate_pairs_serial(a, b, acc, fold_mu);
  return algebra_from_acc(acc);
}

CyclicElement loday_bracket_projected(const AlgebraElement& a, const AlgebraElement& b) {
  WordAcc acc;
  accumulate_pairs_omp(a, b, acc, fold_projected);
  return cyclic_from_acc(acc);
}

CyclicElement loday_bracket_projected_serial(const AlgebraElement& a,
                                             const AlgebraElement& b) {
  WordAcc acc;
  accumulate_pairs_serial(a, b, acc, fold_projected);
  return cyclic_from_acc(acc);
}

std::vector<AlgebraElement> taylor_flow(const AlgebraElement& H,
                                        const AlgebraElement& x, int order) {
  if (order < 0) throw DomainError("taylor_flow order must be >= 0");
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  out.push_back(x);
  for (int n = 0; n < order; ++n) out.push_back(loday_bracket(H, out.back()));
  return out;
}

std::pair<TensorElement, TensorElement> verify_leibniz(const AlgebraElement& a,
                                                       const AlgebraElement& b,
                                                       const AlgebraElement& c) {
  auto one = AlgebraElement(1);
  TensorElement outer = double_bracket(a, b * c) -
                        tensor_mul(double_bracket(a, b), tensor(one, c)) -
                        tensor_mul(tensor(b, one), double_bracket(a, c));
  TensorElement inner = double_bracket(a * b, c) -
                        tensor_mul(double_bracket(a, c), tensor(b, one)) -
                        tensor_mul(tensor(one, a), double_bracket(b, c));
  return {outer, inner};
}

AlgebraElement verify_cyclic_first_arg(const AlgebraElement& a, const AlgebraElement& b,
                                       const AlgebraElement& c) {
  return loday_bracket(a * b, c) - loday_bracket(b * a, c);
}

CyclicElement verify_skew_mod_commutator(const AlgebraElement& a,
                                         const AlgebraElement& b) {
  return loday_bracket_projected(a, b) + loday_bracket_projected(b, a);
}

AlgebraElement verify_jacobi(const AlgebraElement& H1, const AlgebraElement& H2,
                             const AlgebraElement& x) {
  return loday_bracket(H1, loday_bracket(H2, x)) -
         loday_bracket(H2, loday_bracket(H1, x)) -
         loday_bracket(loday_bracket(H1, H2), x);
}

TensorElement casimir_r() {
  TensorElement r;
  r.add_term(Word::reduce({Letter::u, Letter::v}),
             Word::reduce({Letter::uinv, Letter::vinv}), 1);
  return r;
}

std::pair<TensorElement, AlgebraElement> verify_right_casimir(const AlgebraElement& a) {
  const AlgebraElement c = casimir_c();
  const auto one = AlgebraElement(1);
  const TensorElement r = casimir_r();
  TensorElement expected = tensor_mul(tensor(one, a), r) - tensor_mul(r, tensor(a, one));
  return {double_bracket(a, c) - expected, loday_bracket(a, c)};
}

CyclicElement verify_involution(int N, int M, int guard_nm) {
  if (N < 1 || M < 1) throw DomainError("involution powers must be >= 1");
  if (N + M > guard_nm)
    throw GuardError("involution guard: N+M = " + std::to_string(N + M) +
                     " exceeds " + std::to_string(guard_nm));
  const AlgebraElement h = hamiltonian_h();
  return loday_bracket_projected(h.pow(N), h.pow(M));
}

int letter_degree(Letter x) {
  return u_family(x) ? -letter_exponent(x) : letter_exponent(x);
}

int quadruple_potential(Letter x1, Letter x2, Letter x3, Letter x4) {
  (void)x1;
  if (x2 == x4) return letter_degree(x2);
  if (mutually_inverse(x3, x4)) return letter_degree(x3);
  return 0;
}

QuadrupleReport verify_quadruple_potential() {
  struct Row {
    Letter q[4];
    int value;
  };
  constexpr Letter U = Letter::u, V = Letter::v;
  // the paper's table: f = +1 / 0 / -1 per quadruple over {u,v}
  static const Row rows[] = {
      {{V, V, U, V}, +1}, {{U, V, V, V}, +1}, {{V, V, V, V}, +1}, {{U, V, U, V}, +1},
      {{V, V, U, U}, 0},  {{V, U, U, V}, 0},  {{U, V, V, U}, 0},  {{U, U, V, V}, 0},
      {{V, V, V, U}, 0},  {{V, U, V, V}, 0},  {{U, V, U, U}, 0},  {{U, U, U, V}, 0},
      {{V, U, U, U}, -1}, {{V, U, V, U}, -1}, {{U, U, U, U}, -1}, {{U, U, V, U}, -1},
  };
  QuadrupleReport report;
  for (const Row& row : rows) {
    ++report.entries;
    int got = quadruple_potential(row.q[0], row.q[1], row.q[2], row.q[3]);
    if (got != row.value) {
      ++report.mismatches;
      std::string quad;
      for (Letter x : row.q) quad += u_family(x) ? 'u' : 'v';
      report.details.push_back(quad + ": expected " + std::to_string(row.value) +
                               ", formula gives " + std::to_string(got));
    }
  }
  return report;
}

}  // namespace ncis
