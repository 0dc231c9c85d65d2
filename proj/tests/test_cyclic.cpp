#include <catch2/catch_amalgamated.hpp>

#include "ncis/cyclic.hpp"
#include "ncis/parse.hpp"
#include "ncis/random.hpp"

using namespace ncis;

namespace {

// independent oracle: compare every rotation directly
std::string least_rotation_oracle(std::string_view s) {
  if (s.empty()) return {};
  std::string best(s);
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::string rot = std::string(s.substr(r)) + std::string(s.substr(0, r));
    if (rot < best) best = rot;
  }
  return best;
}

Word word_of(const std::string& expr) {
  auto e = parse(expr);
  REQUIRE(e.term_count() == 1);
  return e.terms().begin()->first;
}

std::string rotate(std::string_view s, std::size_t r) {
  return std::string(s.substr(r)) + std::string(s.substr(0, r));
}

}  // namespace

TEST_CASE("cyclic canonicalization examples", "[cyclic]") {
  CHECK(cyclic_canonical(word_of("u*v*u^-1")) == cyclic_canonical(word_of("v")));
  CHECK(cyclic_canonical(word_of("v*u")) == cyclic_canonical(word_of("u*v")));
  CHECK(render(cyclic_canonical(word_of("v*u"))) == "u*v");

  // least rotation among all four rotations, against the direct oracle
  Word w = word_of("u*v*u*v^-1");
  auto canon = cyclic_canonical(w);
  CHECK(std::string(canon.bytes()) == least_rotation_oracle(w.bytes()));
}

TEST_CASE("minimal rotation matches the all-rotations oracle", "[cyclic]") {
  Rng rng(43);
  for (int trial = 0; trial < 2000; ++trial) {
    Word w = random_word(rng, rng.below(13));
    std::string_view s = w.bytes();
    std::size_t idx = min_rotation_index(s);
    CHECK(rotate(s, idx) == least_rotation_oracle(s));
  }
}

TEST_CASE("canonicalization is rotation invariant", "[cyclic]") {
  Rng rng(47);
  int checked = 0;
  while (checked < 500) {
    Word w = random_word(rng, 1 + rng.below(10));
    // skip words that are not cyclically reduced; their rotations are not words
    if (w.size() >= 2 && mutually_inverse(w.letter(0), w.letter(w.size() - 1))) continue;
    ++checked;
    auto canon = cyclic_canonical(w);
    for (std::size_t r = 0; r < w.size(); ++r) {
      Word rotated = Word::from_reduced_bytes(rotate(w.bytes(), r));
      CHECK(cyclic_canonical(rotated) == canon);
    }
  }
}

TEST_CASE("projection kills commutators", "[cyclic]") {
  CHECK(project(parse("u*v - v*u")).is_zero());
  CHECK(project(parse("u*v*u^-1")) == project(parse("v")));

  auto pi_h = project(hamiltonian_h());
  CHECK(pi_h.term_count() == 5);
  for (const auto& [w, c] : pi_h.terms()) CHECK(c == 1);
}

TEST_CASE("pi(ab) = pi(ba) on random words", "[cyclic]") {
  Rng rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    AlgebraElement a{random_word_up_to(rng, 8)};
    AlgebraElement b{random_word_up_to(rng, 8)};
    CHECK(project(a * b) == project(b * a));
  }
}

TEST_CASE("pi(xy - yx) = 0 on random elements", "[cyclic]") {
  Rng rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    AlgebraElement x = random_element(rng, 4, 6);
    AlgebraElement y = random_element(rng, 4, 6);
    CHECK(project(x * y - y * x).is_zero());
  }
}

TEST_CASE("cyclic element JSON serialization", "[cyclic]") {
  auto e = project(parse("3/2*u*v + u^-1"));
  CHECK(to_json_string(e) == R"({"u^-1":"1","u*v":"3/2"})");
}
