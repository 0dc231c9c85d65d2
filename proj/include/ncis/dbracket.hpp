#pragma once

#include <utility>
#include <vector>

#include "ncis/cyclic.hpp"
#include "ncis/tensor.hpp"

namespace ncis {

/// The 16-entry generator table of the modified double bracket. The four
/// entries on positive letters are the defining ones; the rest are forced by
/// the two Leibniz identities (derived once at startup, not hand-copied).
const TensorElement& generator_bracket(Letter a, Letter b);

// <<a (x) b>>: bilinear extension of the generator table by the explicit
// double-sum formula over monomial letter positions. The unsuffixed kernels
// split the term-pair loop across OpenMP threads; the _serial ones are the
// plain reference used for testing and benchmarking.
TensorElement double_bracket(const AlgebraElement& a, const AlgebraElement& b);
TensorElement double_bracket_serial(const AlgebraElement& a, const AlgebraElement& b);

/// {a,b}_K = mu(<<a (x) b>>), accumulated without materializing the tensor.
AlgebraElement loday_bracket(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement loday_bracket_serial(const AlgebraElement& a, const AlgebraElement& b);

/// pi({a,b}_K), fused: every elementary term lands on its canonical cyclic
/// word immediately. This is the workhorse of the involution checks.
CyclicElement loday_bracket_projected(const AlgebraElement& a, const AlgebraElement& b);
CyclicElement loday_bracket_projected_serial(const AlgebraElement& a,
                                             const AlgebraElement& b);

/// da/dt under the Hamiltonian H: {H, x}_K.
inline AlgebraElement flow_derivative(const AlgebraElement& H, const AlgebraElement& x) {
  return loday_bracket(H, x);
}

/// [x, D(x), D^2(x), ..., D^order(x)] with D = {H, _}_K; the formal-in-time
/// solution is x(t) = sum t^n/n! D^n(x).
std::vector<AlgebraElement> taylor_flow(const AlgebraElement& H,
                                        const AlgebraElement& x, int order);

/// Both Leibniz residuals; each must vanish identically.
///   <<a (x) bc>> - <<a (x) b>>(1 (x) c) - (b (x) 1)<<a (x) c>>
///   <<ab (x) c>> - <<a (x) c>>(b (x) 1) - (1 (x) a)<<b (x) c>>
std::pair<TensorElement, TensorElement> verify_leibniz(const AlgebraElement& a,
                                                       const AlgebraElement& b,
                                                       const AlgebraElement& c);

/// {ab,c}_K - {ba,c}_K; must be 0.
AlgebraElement verify_cyclic_first_arg(const AlgebraElement& a, const AlgebraElement& b,
                                       const AlgebraElement& c);

/// pi({a,b}_K + {b,a}_K); must be 0.
CyclicElement verify_skew_mod_commutator(const AlgebraElement& a,
                                         const AlgebraElement& b);

/// {H1,{H2,x}} - {H2,{H1,x}} - {{H1,H2},x}; must be 0 exactly in A.
AlgebraElement verify_jacobi(const AlgebraElement& H1, const AlgebraElement& H2,
                             const AlgebraElement& x);

/// r = uv (x) u^-1 v^-1 from the right-Casimir identity.
TensorElement casimir_r();

/// (<<a (x) c>> - ((1 (x) a) r - r (a (x) 1)),  {a,c}_K); both must vanish.
std::pair<TensorElement, AlgebraElement> verify_right_casimir(const AlgebraElement& a);

/// pi({h^N, h^M}_K); must be 0. Guarded at N+M <= guard_nm.
CyclicElement verify_involution(int N, int M, int guard_nm = 10);

/// Degree grading of the appendix: deg v = deg u^-1 = +1, deg u = deg v^-1 = -1.
int letter_degree(Letter x);

/// The quadruple potential: deg x2 if x2 == x4; deg x3 if x3 x4 = 1; else 0.
int quadruple_potential(Letter x1, Letter x2, Letter x3, Letter x4);

struct QuadrupleReport {
  int entries = 0;
  int mismatches = 0;
  std::vector<std::string> details;  // one line per mismatch
  bool pass() const { return mismatches == 0; }
};

/// Checks the potential formula against the 16-entry {u,v} table.
QuadrupleReport verify_quadruple_potential();

}  // namespace ncis
