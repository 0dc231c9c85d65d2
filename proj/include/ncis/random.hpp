#pragma once

#include <cstdint>
#include <random>

#include "ncis/algebra.hpp"

namespace ncis {

/// Seeded deterministic generator for property runs. Draws go through plain
/// modulo so sequences replay identically across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  int in_range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

/// Stable per-sample sub-seed, independent of thread scheduling.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Freely reduced word of exactly len letters (never backtracks onto an inverse).
Word random_word(Rng& rng, std::size_t len);

/// Uniform length in [0, max_len].
Word random_word_up_to(Rng& rng, std::size_t max_len);

/// Up to max_terms random words with nonzero coefficients in [-3, 3].
AlgebraElement random_element(Rng& rng, std::size_t max_terms, std::size_t max_len);

}  // namespace ncis
