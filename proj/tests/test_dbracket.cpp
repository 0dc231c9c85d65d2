#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <tuple>

#include "ncis/dbracket.hpp"
#include "ncis/errors.hpp"
#include "ncis/parse.hpp"
#include "ncis/random.hpp"

using namespace ncis;

namespace {

// Independent oracle: recursive Leibniz descent from the generator table,
// never touching the explicit double-sum formula.
//   <<a (x) b'y>> = <<a (x) b'>>(1 (x) y) + (b' (x) 1)<<a (x) y>>
//   <<xa' (x) y>> = <<x (x) y>>(a' (x) 1) + (1 (x) x)<<a' (x) y>>
TensorElement db_oracle_words(const Word& a, const Word& b) {
  if (a.empty() || b.empty()) return {};
  const auto one = AlgebraElement(1);
  if (b.size() > 1) {
    Word prefix = Word::from_reduced_bytes(std::string(b.bytes().substr(0, b.size() - 1)));
    AlgebraElement last{Word::reduce({b.letter(b.size() - 1)})};
    return tensor_mul(db_oracle_words(a, prefix), tensor(one, last)) +
           tensor_mul(tensor(AlgebraElement(prefix), one),
                      db_oracle_words(a, Word::reduce({b.letter(b.size() - 1)})));
  }
  if (a.size() > 1) {
    Word tail = Word::from_reduced_bytes(std::string(a.bytes().substr(1)));
    Word head = Word::reduce({a.letter(0)});
    return tensor_mul(db_oracle_words(head, b), tensor(AlgebraElement(tail), one)) +
           tensor_mul(tensor(one, AlgebraElement(head)), db_oracle_words(tail, b));
  }
  return generator_bracket(a.letter(0), b.letter(0));
}

TensorElement db_oracle(const AlgebraElement& a, const AlgebraElement& b) {
  TensorElement out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      TensorElement part = db_oracle_words(wa, wb);
      part *= ca * cb;
      out += part;
    }
  return out;
}

Word word_of(const std::string& expr) {
  auto e = parse(expr);
  REQUIRE(e.term_count() == 1);
  return e.terms().begin()->first;
}

// minimal triple tensor for the R-matrix negative control
using Triple = std::map<std::tuple<Word, Word, Word>, Rational>;

Triple r_apply(int m, int n, const Triple& t) {
  Triple out;
  for (const auto& [key, c] : t) {
    std::array<Word, 3> w{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
    auto db = double_bracket(AlgebraElement(w[static_cast<std::size_t>(m)]),
                             AlgebraElement(w[static_cast<std::size_t>(n)]));
    for (const auto& [slots, q] : db.terms()) {
      auto img = w;
      img[static_cast<std::size_t>(m)] = slots.first;
      img[static_cast<std::size_t>(n)] = slots.second;
      auto key2 = std::make_tuple(img[0], img[1], img[2]);
      auto [it, inserted] = out.emplace(key2, q * c);
      if (!inserted) {
        it->second += q * c;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

Triple triple_sum(const Triple& a, const Triple& b) {
  Triple out = a;
  for (const auto& [k, c] : b) {
    auto [it, inserted] = out.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("generator table reproduces the printed values", "[dbracket]") {
  auto entry = [](const char* a, const char* b) {
    return generator_bracket(word_of(a).letter(0), word_of(b).letter(0));
  };
  CHECK(entry("u", "v") == -tensor(parse("v*u"), parse("1")));
  CHECK(entry("v", "u") == tensor(parse("u*v"), parse("1")));
  CHECK(entry("u", "u").is_zero());
  CHECK(entry("v", "v").is_zero());
  // the six inverse-letter formulas
  CHECK(entry("u^-1", "v^-1") == -tensor(parse("1"), parse("u^-1*v^-1")));
  CHECK(entry("v^-1", "u^-1") == tensor(parse("1"), parse("v^-1*u^-1")));
  CHECK(entry("u^-1", "v") == tensor(parse("v"), parse("u^-1")));
  CHECK(entry("v", "u^-1") == -tensor(parse("v"), parse("u^-1")));
  CHECK(entry("u", "v^-1") == tensor(parse("u"), parse("v^-1")));
  CHECK(entry("v^-1", "u") == -tensor(parse("u"), parse("v^-1")));
  // every same-family entry vanishes
  for (const char* a : {"u", "u^-1"})
    for (const char* b : {"u", "u^-1"}) CHECK(entry(a, b).is_zero());
  for (const char* a : {"v", "v^-1"})
    for (const char* b : {"v", "v^-1"}) CHECK(entry(a, b).is_zero());
}

TEST_CASE("double bracket on small monomials", "[dbracket]") {
  CHECK(double_bracket(parse("u"), parse("v")) == -tensor(parse("v*u"), parse("1")));
  CHECK(double_bracket(parse("u*v"), parse("u")) == tensor(parse("u*v"), parse("u")));
  CHECK(double_bracket(parse("1"), parse("u")).is_zero());
  CHECK(double_bracket(parse("u"), parse("1")).is_zero());
}

TEST_CASE("double bracket of h with itself", "[dbracket]") {
  const AlgebraElement h = hamiltonian_h();
  const auto a = parse(
      "u^-1 + v^-1 - u^-1*v^-1 + v^-1*u^-1 + u^-1*v^-1*u^-1 + v^-1*u^-1*v^-1 "
      "+ u^-1*v^-1*u^-1*v^-1");
  const auto b = parse("u^-1*v^-1");
  const auto e = parse("u*v - v*u");
  TensorElement expected = tensor(parse("1"), a) - tensor(h, b) + tensor(e, parse("1"));
  CHECK(double_bracket(h, h) == expected);
  // and mu of it gives the Lax form of dh/dt
  CHECK(loday_bracket(h, h) == commutator(h, parse("v + u^-1")));
  CHECK(loday_bracket(h, h) == a + e - h * b);
}

TEST_CASE("explicit formula agrees with Leibniz descent", "[dbracket]") {
  const AlgebraElement h = hamiltonian_h();
  CHECK(double_bracket(h, h) == db_oracle(h, h));
  Rng rng(79);
  for (int trial = 0; trial < 300; ++trial) {
    AlgebraElement a{random_word_up_to(rng, 6)};
    AlgebraElement b{random_word_up_to(rng, 6)};
    CHECK(double_bracket(a, b) == db_oracle(a, b));
  }
}

TEST_CASE("equations of motion", "[dbracket]") {
  const AlgebraElement h = hamiltonian_h();
  CHECK(loday_bracket(h, parse("u")) == parse("u*v - u*v^-1 - v^-1"));
  CHECK(loday_bracket(h, parse("v")) == parse("-v*u + v*u^-1 + u^-1"));
  // dh/dt spelled out (second row of the derivation, not the misprinted one)
  CHECK(loday_bracket(h, h) ==
        parse("u^-1 - v*u^-1*v^-1 + u*v - v*u + v^-1*u^-1 - u^-1*v^-1 "
              "+ u^-1*v^-1*u^-1 - u^-2*v^-1"));
}

TEST_CASE("flow derivative facts", "[dbracket]") {
  const AlgebraElement h = hamiltonian_h();
  CHECK(flow_derivative(h, parse("1")).is_zero());
  CHECK(flow_derivative(parse("u*v"), parse("u")) == parse("u*v*u"));
  CHECK(flow_derivative(parse("v*u"), parse("u")) == parse("u*v*u"));

  // the flow depends on H only through pi(H)
  Rng rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(rng, 2 + rng.below(5));
    if (mutually_inverse(w.letter(0), w.letter(w.size() - 1))) continue;
    std::string rot = std::string(w.bytes().substr(1)) + std::string(w.bytes().substr(0, 1));
    AlgebraElement x{random_word_up_to(rng, 4)};
    CHECK(flow_derivative(AlgebraElement(w), x) ==
          flow_derivative(AlgebraElement(Word::from_reduced_bytes(rot)), x));
  }
}

TEST_CASE("taylor flow", "[dbracket]") {
  const AlgebraElement h = hamiltonian_h();
  auto order0 = taylor_flow(h, parse("u"), 0);
  REQUIRE(order0.size() == 1);
  CHECK(order0[0] == parse("u"));

  auto order1 = taylor_flow(h, parse("u"), 1);
  REQUIRE(order1.size() == 2);
  CHECK(order1[1] == parse("u*v - u*v^-1 - v^-1"));

  auto casimir_flow = taylor_flow(h, casimir_c(), 4);
  for (std::size_t n = 1; n < casimir_flow.size(); ++n)
    CHECK(casimir_flow[n].is_zero());
}

TEST_CASE("Leibniz residuals vanish", "[dbracket]") {
  auto zero_pair = [](const AlgebraElement& a, const AlgebraElement& b,
                      const AlgebraElement& c) {
    auto [outer, inner] = verify_leibniz(a, b, c);
    return outer.is_zero() && inner.is_zero();
  };
  CHECK(zero_pair(parse("u"), parse("v"), parse("v")));
  CHECK(zero_pair(parse("u"), parse("1"), parse("1")));
  CHECK(zero_pair(hamiltonian_h(), parse("u"), parse("v")));
}

TEST_CASE("cyclic invariance of the first argument", "[dbracket]") {
  CHECK(verify_cyclic_first_arg(parse("u"), parse("v"), parse("u")).is_zero());
  CHECK(verify_cyclic_first_arg(parse("u+2*v"), parse("1"), parse("u*v")).is_zero());
  Rng rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement a{random_word_up_to(rng, 6)};
    AlgebraElement b{random_word_up_to(rng, 6)};
    AlgebraElement c{random_word_up_to(rng, 6)};
    CHECK(verify_cyclic_first_arg(a, b, c).is_zero());
  }
}

TEST_CASE("skew symmetry holds with the appendix sign", "[dbracket]") {
  CHECK(verify_skew_mod_commutator(parse("u"), parse("v")).is_zero());
  const AlgebraElement h = hamiltonian_h();
  CHECK(verify_skew_mod_commutator(h, h).is_zero());
  Rng rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement a = random_element(rng, 3, 5);
    AlgebraElement b = random_element(rng, 3, 5);
    CHECK(verify_skew_mod_commutator(a, b).is_zero());
  }
  // the symmetric variant printed in the proposition does NOT hold
  auto sym = loday_bracket_projected(parse("u"), parse("v")) -
             loday_bracket_projected(parse("v"), parse("u"));
  CHECK(!sym.is_zero());
}

TEST_CASE("Jacobi identity of Loday type", "[dbracket]") {
  CHECK(verify_jacobi(parse("u"), parse("v"), parse("u")).is_zero());
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraElement h1 = random_element(rng, 3, 4);
    AlgebraElement h2 = random_element(rng, 3, 4);
    CHECK(verify_jacobi(h1, h2, parse("1")).is_zero());
  }
  for (int trial = 0; trial < 300; ++trial) {
    AlgebraElement h1{random_word_up_to(rng, 5)};
    AlgebraElement h2{random_word_up_to(rng, 5)};
    AlgebraElement x{random_word_up_to(rng, 5)};
    CHECK(verify_jacobi(h1, h2, x).is_zero());
  }
  CHECK(verify_jacobi(hamiltonian_h(), hamiltonian_h().pow(2), parse("u")).is_zero());
}

TEST_CASE("right Casimir law", "[dbracket]") {
  // intermediate value from the proof
  CHECK(double_bracket(parse("u"), casimir_c()) ==
        tensor(parse("u*v"), parse("v^-1")) -
            tensor(parse("u*v*u"), parse("u^-1*v^-1")));

  for (const auto& a : {parse("u"), parse("1"), hamiltonian_h().pow(3)}) {
    auto [tensor_res, flow_res] = verify_right_casimir(a);
    CHECK(tensor_res.is_zero());
    CHECK(flow_res.is_zero());
  }

  // not a left Casimir: pi(c) generates a nontrivial flow
  CHECK(loday_bracket(casimir_c(), parse("u")) ==
        parse("u*v*u^-1*v^-1*u - u^2*v*u^-1*v^-1"));
}

TEST_CASE("involution of the h-power Hamiltonians", "[dbracket]") {
  CHECK(verify_involution(1, 1).is_zero());
  CHECK(verify_involution(1, 2).is_zero());
  CHECK(verify_involution(2, 3).is_zero());
  CHECK_THROWS_AS(verify_involution(5, 6), GuardError);
}

TEST_CASE("quadruple potential function", "[dbracket]") {
  auto L = [](const char* s) { return word_of(s).letter(0); };
  CHECK(quadruple_potential(L("v"), L("v"), L("u"), L("v")) == +1);
  CHECK(quadruple_potential(L("u"), L("u"), L("v"), L("v")) == 0);
  CHECK(quadruple_potential(L("u"), L("v"), L("u^-1"), L("u")) == +1);
  CHECK(letter_degree(L("v")) == +1);
  CHECK(letter_degree(L("u^-1")) == +1);
  CHECK(letter_degree(L("u")) == -1);
  CHECK(letter_degree(L("v^-1")) == -1);

  auto report = verify_quadruple_potential();
  CHECK(report.entries == 16);
  CHECK(report.mismatches == 0);
  CHECK(report.pass());
}

TEST_CASE("strong Van den Bergh axioms genuinely fail", "[dbracket]") {
  // strong antisymmetry <<a (x) b>> = -<<b (x) a>>° fails already on (u,v)
  auto lhs = double_bracket(parse("u"), parse("v"));
  auto rhs = -opposite(double_bracket(parse("v"), parse("u")));
  CHECK(lhs != rhs);

  // and the type-I Jacobi R12 R23 + R31 R12 + R23 R31 = 0 fails on u (x) v (x) u
  Triple start;
  start.emplace(std::make_tuple(word_of("u"), word_of("v"), word_of("u")), Rational(1));
  auto total = triple_sum(triple_sum(r_apply(0, 1, r_apply(1, 2, start)),
                                     r_apply(2, 0, r_apply(0, 1, start))),
                          r_apply(1, 2, r_apply(2, 0, start)));
  CHECK(!total.empty());
}

TEST_CASE("parallel kernels match the serial reference", "[dbracket]") {
  Rng rng(103);
  const AlgebraElement h = hamiltonian_h();
  CHECK(double_bracket(h, h) == double_bracket_serial(h, h));
  CHECK(loday_bracket(h.pow(2), h) == loday_bracket_serial(h.pow(2), h));
  CHECK(loday_bracket_projected(h.pow(2), h.pow(2)) ==
        loday_bracket_projected_serial(h.pow(2), h.pow(2)));
  for (int trial = 0; trial < 50; ++trial) {
    AlgebraElement a = random_element(rng, 4, 5);
    AlgebraElement b = random_element(rng, 4, 5);
    CHECK(double_bracket(a, b) == double_bracket_serial(a, b));
    CHECK(loday_bracket(a, b) == loday_bracket_serial(a, b));
    CHECK(loday_bracket_projected(a, b) == loday_bracket_projected_serial(a, b));
  }
}
