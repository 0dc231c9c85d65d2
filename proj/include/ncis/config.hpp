#pragma once

#include <cstddef>

namespace ncis {

/// Term-count ceiling for the large symbolic accumulations. The NCIS_MAX_TERMS
/// environment variable overrides the default (8e6).
std::size_t max_terms_guard();

/// Throws GuardError when count exceeds the ceiling.
void check_term_guard(std::size_t count);

}  // namespace ncis
