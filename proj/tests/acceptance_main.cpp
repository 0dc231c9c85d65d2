// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code. Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "ncis/lax.hpp"
#include "ncis/numrep.hpp"
#include "ncis/parse.hpp"
#include "ncis/random.hpp"
#include "ncis/ratlinalg.hpp"
#include "ncis/specialize.hpp"
#include "ncis/verify.hpp"

using namespace ncis;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool criterion_generator_table(std::string& detail) {
  auto entry = [](Letter a, Letter b) { return generator_bracket(a, b); };
  int matched = 0;
  matched += entry(Letter::u, Letter::v) == -tensor(parse("v*u"), parse("1"));
  matched += entry(Letter::v, Letter::u) == tensor(parse("u*v"), parse("1"));
  matched += entry(Letter::uinv, Letter::vinv) == -tensor(parse("1"), parse("u^-1*v^-1"));
  matched += entry(Letter::vinv, Letter::uinv) == tensor(parse("1"), parse("v^-1*u^-1"));
  matched += entry(Letter::uinv, Letter::v) == tensor(parse("v"), parse("u^-1"));
  matched += entry(Letter::v, Letter::uinv) == -tensor(parse("v"), parse("u^-1"));
  matched += entry(Letter::u, Letter::vinv) == tensor(parse("u"), parse("v^-1"));
  matched += entry(Letter::vinv, Letter::u) == -tensor(parse("u"), parse("v^-1"));
  bool zeros = true;
  for (Letter a : {Letter::u, Letter::uinv, Letter::v, Letter::vinv})
    for (Letter b : {Letter::u, Letter::uinv, Letter::v, Letter::vinv})
      if (u_family(a) == u_family(b)) zeros = zeros && entry(a, b).is_zero();
  detail = fmt::format("{}/8 printed values, same-family zeros {}", matched,
                       zeros ? "hold" : "FAIL");
  return matched == 8 && zeros;
}

bool criterion_equations_of_motion(std::string& detail) {
  const AlgebraElement h = hamiltonian_h();
  bool du = loday_bracket(h, parse("u")) == parse("u*v - u*v^-1 - v^-1");
  bool dv = loday_bracket(h, parse("v")) == parse("-v*u + v*u^-1 + u^-1");
  detail = fmt::format("{{h,u}} {}, {{h,v}} {}", du ? "exact" : "FAIL",
                       dv ? "exact" : "FAIL");
  return du && dv;
}

bool criterion_hh_bracket(std::string& detail) {
  const AlgebraElement h = hamiltonian_h();
  const auto a = parse(
      "u^-1 + v^-1 - u^-1*v^-1 + v^-1*u^-1 + u^-1*v^-1*u^-1 + v^-1*u^-1*v^-1 "
      "+ u^-1*v^-1*u^-1*v^-1");
  const auto b = parse("u^-1*v^-1");
  const auto e = parse("u*v - v*u");
  bool tensor_ok = double_bracket(h, h) ==
                   tensor(parse("1"), a) - tensor(h, b) + tensor(e, parse("1"));
  bool lax_form = loday_bracket(h, h) == commutator(h, parse("v + u^-1"));
  detail = fmt::format("<<h,h>> = 1(x)a - h(x)b + e(x)1 {}; {{h,h}} = [h, v+u^-1] {}",
                       tensor_ok ? "exact" : "FAIL", lax_form ? "exact" : "FAIL");
  return tensor_ok && lax_form;
}

bool criterion_involution(std::string& detail) {
  auto r = run_involution_suite(8);
  detail = fmt::format("pi({{h^N,h^M}}) = 0 for all N+M <= 8 ({} pairs, {:.1f}s)",
                       r.samples, r.elapsed_seconds);
  return r.pass;
}

bool criterion_casimir(std::string& detail) {
  SuiteOptions opt{100, 6, 0, true};
  auto r = run_casimir_suite(opt);
  detail = fmt::format(
      "<<a,c>> law + {{a,c}} = 0 + pi({{H,c}}) = 0 on {} samples; {}", r.samples,
      r.pass ? "left-Casimir counterexample nonzero and exact" : r.counterexample);
  return r.pass;
}

bool criterion_loday_axioms(std::string& detail) {
  SuiteOptions opt{1000, 5, 0, true};
  auto leibniz = run_leibniz_suite(opt);
  auto cyclic = run_cyclic_suite(opt);
  auto skew = run_skew_suite(opt);
  auto jacobi = run_jacobi_suite(opt);
  detail = fmt::format("1000 tuples each: leibniz {} cyclic {} skew {} jacobi {}",
                       leibniz.pass ? "ok" : "FAIL", cyclic.pass ? "ok" : "FAIL",
                       skew.pass ? "ok" : "FAIL", jacobi.pass ? "ok" : "FAIL");
  return leibniz.pass && cyclic.pass && skew.pass && jacobi.pass;
}

bool criterion_lax(std::string& detail) {
  auto r = run_lax_suite(3);
  detail = r.note;
  return r.pass;
}

bool criterion_span(std::string& detail) {
  auto report = span_experiment(3);
  std::size_t members = 0;
  for (const auto& e : report.entries) members += e.member;
  detail = fmt::format("{}/{} lambda coefficients member (degree bound {}, basis {})",
                       members, report.entries.size(), report.degree_bound,
                       report.basis_size);
  return report.all_member();
}

bool criterion_independence(std::string& detail) {
  std::vector<CyclicElement> powers;
  const AlgebraElement h = hamiltonian_h();
  for (int k = 1; k <= 6; ++k) powers.push_back(project(h.pow(k)));
  std::size_t r = rank(powers);
  detail = fmt::format("rank(pi(h),...,pi(h^6)) = {}", r);
  return r == 6;
}

bool criterion_specializations(std::string& detail) {
  Rng rng(1);
  bool classical = true;
  for (int trial = 0; trial < 500 && classical; ++trial) {
    AlgebraElement a = random_element(rng, 3, 5);
    AlgebraElement b = random_element(rng, 3, 5);
    classical = abelianize(loday_bracket(a, b)) ==
                classical_poisson(abelianize(a), abelianize(b));
  }
  bool multiplicative = true;
  for (int trial = 0; trial < 100 && multiplicative; ++trial) {
    AlgebraElement x = random_element(rng, 3, 5);
    AlgebraElement y = random_element(rng, 3, 5);
    multiplicative =
        qweyl_normal_form(x * y) == qweyl_mul(qweyl_normal_form(x), qweyl_normal_form(y));
  }
  const Rational q0(5, 3);
  const AlgebraElement ideal_gen = casimir_c() - AlgebraElement(q0);
  bool descends = true;
  for (int trial = 0; trial < 100 && descends; ++trial) {
    AlgebraElement x = random_element(rng, 3, 4);
    AlgebraElement p = random_element(rng, 2, 3);
    AlgebraElement s = random_element(rng, 2, 3);
    descends = verify_flow_descends(x, x + p * ideal_gen * s, q0).is_zero();
  }
  detail = fmt::format(
      "classical counterpart on 500 pairs {}; q-Weyl multiplicative on 100 {}; "
      "flow descends on 100 perturbed pairs {}",
      classical ? "ok" : "FAIL", multiplicative ? "ok" : "FAIL",
      descends ? "ok" : "FAIL");
  return classical && multiplicative && descends;
}

bool criterion_numeric(std::string& detail) {
  const int n = 4, k_max = 4;
  const double T = 1.0, dt = 1e-3;
  const double drift_tol = 1e-6, backlund_tol = 1e-5;

  NumericRep rep = random_rep(n, 0);
  Trajectory traj = integrate(rep, T, dt);
  auto report = conservation_report(traj, k_max, default_lambda_samples(3));
  double drift = report.max_drift();

  auto bk = backlund_check(rep, T, dt);
  double order = convergence_order(rep, T, 8 * dt, k_max);  // 8e-3 vs 4e-3 halving

  bool ok = drift <= drift_tol && bk.max_deviation <= backlund_tol &&
            std::abs(order - 4.0) <= 0.5;
  detail = fmt::format(
      "N=4 T=1 dt=1e-3: max drift {:.2e} (tol 1e-6), backlund {:.2e} (tol 1e-5), "
      "order {:.2f} (4 +- 0.5)",
      drift, bk.max_deviation, order);
  return ok;
}

bool criterion_quadruple(std::string& detail) {
  auto r = verify_quadruple_potential();
  detail = fmt::format("{}/{} table entries match", r.entries - r.mismatches, r.entries);
  return r.pass();
}

bool criterion_negative_control(std::string& detail) {
  auto lhs = double_bracket(parse("u"), parse("v"));
  auto rhs = -opposite(double_bracket(parse("v"), parse("u")));
  bool fails = lhs != rhs;
  detail = fmt::format("strong antisymmetry on (u,v): <<u,v>> = {}, -<<v,u>>^o = {}",
                       render(lhs), render(rhs));
  return fails;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"generator table (KBracketOnGenerators + inverse letters)", criterion_generator_table},
      {"equations of motion {h,u}, {h,v}", criterion_equations_of_motion},
      {"<<h,h>> closed form and Lax form of dh/dt", criterion_hh_bracket},
      {"involution pi({h^N,h^M}) = 0, N+M <= 8", criterion_involution},
      {"right Casimir laws and left counterexample", criterion_casimir},
      {"Loday bracket axioms on 1000-tuple batches", criterion_loday_axioms},
      {"matrix Lax equation and trace integrals k <= 3", criterion_lax},
      {"span experiment: pi(Tr L^k) in <h,c,c^-1>, k <= 3", criterion_span},
      {"linear independence of pi(h^k), k <= 6", criterion_independence},
      {"classical and quantum specializations", criterion_specializations},
      {"numeric conservation, convergence order, Backlund", criterion_numeric},
      {"appendix quadruple potential table", criterion_quadruple},
      {"negative control: strong antisymmetry fails", criterion_negative_control},
  };

  int failures = 0;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool pass = false;
    try {
      pass = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = fmt::format("exception: {}", e.what());
    }
    if (!pass) ++failures;
    fmt::print("[{:2}/13] {} {}\n        {}\n", i + 1, pass ? "PASS" : "FAIL",
               criteria[i].name, detail);
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  fmt::print("{} of 13 criteria passed in {:.1f}s\n", 13 - failures, elapsed);
  return failures;
}
