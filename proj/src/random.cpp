#include "ncis/random.hpp"

namespace ncis {

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Word random_word(Rng& rng, std::size_t len) {
  WordBuilder b;
  Letter prev{};
  for (std::size_t i = 0; i < len; ++i) {
    Letter x;
    if (i == 0) {
      x = Letter(rng.below(4));
    } else {
      // choose among the three letters that do not cancel the previous one
      auto k = rng.below(3);
      auto banned = static_cast<unsigned char>(inverse(prev));
      unsigned char pick = 0;
      for (unsigned char c = 0; c < 4; ++c) {
        if (c == banned) continue;
        if (k-- == 0) {
          pick = c;
          break;
        }
      }
      x = Letter(pick);
    }
    b.push(x);
    prev = x;
  }
  return b.take();
}

Word random_word_up_to(Rng& rng, std::size_t max_len) {
  return random_word(rng, rng.below(max_len + 1));
}

AlgebraElement random_element(Rng& rng, std::size_t max_terms, std::size_t max_len) {
  AlgebraElement out;
  std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < n; ++i) {
    int c = rng.in_range(1, 3) * (rng.below(2) ? -1 : 1);
    out.add_term(random_word_up_to(rng, max_len), Rational(c));
  }
  return out;
}

}  // namespace ncis
