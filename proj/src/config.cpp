#include "ncis/config.hpp"

#include <cstdlib>
#include <string>

#include "ncis/errors.hpp"

namespace ncis {

std::size_t max_terms_guard() {
  static const std::size_t limit = [] {
    if (const char* env = std::getenv("NCIS_MAX_TERMS")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(8'000'000);
  }();
  return limit;
}

void check_term_guard(std::size_t count) {
  if (count > max_terms_guard())
    throw GuardError("term count " + std::to_string(count) +
                     " exceeds resource guard (set NCIS_MAX_TERMS to raise)");
}

}  // namespace ncis
