#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ncis/dbracket.hpp"

namespace ncis {

/// Outcome of one identity suite: residuals must be exactly zero, so
/// max_residual_terms must come out 0 for a pass.
struct IdentityReport {
  std::string identity;
  std::size_t samples = 0;
  std::size_t max_residual_terms = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0;
  bool pass = false;
  std::string counterexample;  // first failing tuple, rendered
  std::string note;
};

nlohmann::json to_json(const IdentityReport& r);

struct SuiteOptions {
  std::size_t samples = 1000;
  std::size_t max_len = 5;
  std::uint64_t seed = 0;
  bool parallel = true;  // split samples across OpenMP threads
};

/// Both double-bracket Leibniz identities on random monomial triples.
IdentityReport run_leibniz_suite(const SuiteOptions& opt);

/// {ab,c} = {ba,c} on random monomial triples.
IdentityReport run_cyclic_suite(const SuiteOptions& opt);

/// pi({a,b}+{b,a}) = 0 on random monomial pairs; the note records which sign
/// variant holds empirically (the printed proposition and the appendix differ).
IdentityReport run_skew_suite(const SuiteOptions& opt);

/// Loday-type Jacobi identity on random monomial triples (inverses included).
IdentityReport run_jacobi_suite(const SuiteOptions& opt);

/// Right-Casimir law <<a (x) c>> = (1 (x) a)r - r(a (x) 1), {a,c} = 0, the
/// nonzero {c,u} counterexample, and pi({H,c}) = 0 on random elements.
IdentityReport run_casimir_suite(const SuiteOptions& opt);

/// pi({h^N, h^M}) = 0 for all N,M >= 1 with N+M <= nm_max.
IdentityReport run_involution_suite(int nm_max, int guard_nm = 10);

/// dL/dt = [L,M] entrywise and d/dt pi(Tr L^k) = 0 for k <= k_max.
IdentityReport run_lax_suite(int k_max = 3);

/// The appendix potential formula against its 16-entry table.
IdentityReport run_quadruple_suite();

/// Everything above with acceptance-grade defaults.
std::vector<IdentityReport> run_all_suites(const SuiteOptions& opt, int nm_max = 8);

}  // namespace ncis
