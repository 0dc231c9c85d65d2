#include <catch2/catch_amalgamated.hpp>

#include "ncis/errors.hpp"
#include "ncis/parse.hpp"
#include "ncis/random.hpp"

using namespace ncis;

TEST_CASE("products expand and collect", "[algebra]") {
  CHECK(parse("u+v") * parse("u-v") == parse("u^2 - u*v + v*u - v^2"));
  AlgebraElement h = hamiltonian_h();
  CHECK(h * AlgebraElement(1) == h);
  CHECK(parse("u*v") * parse("v^-1*u^-1") == AlgebraElement(1));
}

TEST_CASE("negative powers of sums are rejected", "[algebra]") {
  CHECK(hamiltonian_h().pow(0) == AlgebraElement(1));
  CHECK_THROWS_AS(hamiltonian_h().pow(-1), DomainError);
  CHECK_THROWS_WITH(hamiltonian_h().pow(-2),
                    Catch::Matchers::ContainsSubstring("not invertible"));
}

TEST_CASE("multiplication is associative", "[algebra]") {
  Rng rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    AlgebraElement a = random_element(rng, 4, 5);
    AlgebraElement b = random_element(rng, 4, 5);
    AlgebraElement c = random_element(rng, 4, 5);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("commutator basics", "[algebra]") {
  AlgebraElement u{Letter::u}, v{Letter::v};
  CHECK(commutator(u, u).is_zero());
  CHECK(commutator(u, v) == parse("u*v - v*u"));
}

TEST_CASE("the Hamiltonian and the Casimir", "[algebra]") {
  AlgebraElement h = hamiltonian_h();
  CHECK(h.term_count() == 5);
  for (const auto& [w, c] : h.terms()) CHECK(c == 1);
  CHECK(h == parse("u + v + u^-1 + v^-1 + u^-1*v^-1"));

  AlgebraElement c = casimir_c();
  REQUIRE(c.term_count() == 1);
  CHECK(c.terms().begin()->first.size() == 4);
  CHECK(c * casimir_c_inverse() == AlgebraElement(1));
}

TEST_CASE("distributivity and scalar action", "[algebra]") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    AlgebraElement a = random_element(rng, 3, 4);
    AlgebraElement b = random_element(rng, 3, 4);
    AlgebraElement c = random_element(rng, 3, 4);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(Rational(3, 2) * (a + b) == Rational(3, 2) * a + Rational(3, 2) * b);
  }
}
