// Command-line front end: expression evaluation, brackets, flows, the
// verification suites, the span experiment and the numeric simulator.
//
// Exit codes: 0 success, 1 identity/conservation failure, 2 input error,
// 3 resource guard.

#include <CLI11.hpp>
#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "ncis/errors.hpp"
#include "ncis/lax.hpp"
#include "ncis/numrep.hpp"
#include "ncis/parse.hpp"
#include "ncis/specialize.hpp"
#include "ncis/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitGuard = 3;

void print_report(const ncis::IdentityReport& r, bool json) {
  if (json) {
    fmt::print("{}\n", ncis::to_json(r).dump(2));
    return;
  }
  fmt::print("[{}] {}: samples={} max_residual_terms={} seed={} elapsed={:.3f}s\n",
             r.pass ? "PASS" : "FAIL", r.identity, r.samples, r.max_residual_terms,
             r.seed, r.elapsed_seconds);
  if (!r.note.empty()) fmt::print("       {}\n", r.note);
  if (!r.counterexample.empty()) fmt::print("       counterexample: {}\n", r.counterexample);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact kernel for the Kontsevich system's noncommutative "
               "Hamiltonian formalism"};
  app.require_subcommand(1);

  // eval
  std::string eval_expr;
  bool eval_json = false;
  auto* eval_cmd = app.add_subcommand("eval", "parse and canonically render an expression");
  eval_cmd->add_option("expr", eval_expr, "expression, e.g. \"u*v^-1 + 2\"")->required();
  eval_cmd->add_flag("--json", eval_json);

  // bracket
  std::string br_a, br_b, br_mode = "loday";
  bool br_json = false;
  auto* br_cmd = app.add_subcommand("bracket", "double or Loday bracket of two expressions");
  br_cmd->add_option("a", br_a)->required();
  br_cmd->add_option("b", br_b)->required();
  br_cmd->add_option("--mode", br_mode)->check(CLI::IsMember({"double", "loday"}));
  br_cmd->add_flag("--json", br_json);

  // flow
  std::string flow_h, flow_x;
  int flow_order = 1;
  bool flow_json = false;
  auto* flow_cmd = app.add_subcommand("flow", "iterated flow derivatives D^n(x), D = {H,_}_K");
  flow_cmd->add_option("H", flow_h)->required();
  flow_cmd->add_option("x", flow_x)->required();
  flow_cmd->add_option("--order", flow_order)->check(CLI::NonNegativeNumber);
  flow_cmd->add_flag("--json", flow_json);

  // verify
  std::string suite;
  std::size_t vf_samples = 1000, vf_max_len = 5;
  std::uint64_t vf_seed = 0;
  int vf_nm = 8;
  bool vf_json = false, vf_serial = false;
  auto* vf_cmd = app.add_subcommand("verify", "run an identity suite");
  vf_cmd->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"leibniz", "cyclic", "skew", "jacobi", "casimir",
                             "involution", "lax", "quadruple", "all"}));
  vf_cmd->add_option("--samples", vf_samples);
  vf_cmd->add_option("--max-len", vf_max_len);
  vf_cmd->add_option("--seed", vf_seed);
  vf_cmd->add_option("--nm", vf_nm, "involution: check all N+M <= nm");
  vf_cmd->add_flag("--serial", vf_serial, "keep sample loops on one thread");
  vf_cmd->add_flag("--json", vf_json);

  // span
  int span_kmax = 3, span_degree = -1;
  bool span_json = false;
  auto* span_cmd = app.add_subcommand("span", "trace-integral span experiment");
  span_cmd->add_option("--kmax", span_kmax)->check(CLI::PositiveNumber);
  span_cmd->add_option("--degree", span_degree,
                       "basis degree bound (default: computed from pi(Tr L^kmax))");
  span_cmd->add_flag("--json", span_json);

  // simulate
  int sim_n = 4, sim_kmax = 4, sim_lambdas = 3;
  double sim_T = 1.0, sim_dt = 1e-3, sim_tol = -1;
  std::uint64_t sim_seed = 0;
  bool sim_json = false, sim_backlund = false, sim_order = false;
  auto* sim_cmd = app.add_subcommand("simulate", "RK4 matrix simulator and conservation report");
  sim_cmd->add_option("--n", sim_n)->check(CLI::PositiveNumber);
  sim_cmd->add_option("--T", sim_T);
  sim_cmd->add_option("--dt", sim_dt);
  sim_cmd->add_option("--seed", sim_seed);
  sim_cmd->add_option("--kmax", sim_kmax);
  sim_cmd->add_option("--lambda-samples", sim_lambdas);
  sim_cmd->add_option("--tol", sim_tol, "exit 1 when max relative drift exceeds this");
  sim_cmd->add_flag("--backlund", sim_backlund, "also run the Backlund symmetry check");
  sim_cmd->add_flag("--order-check", sim_order, "measure the RK4 convergence order");
  sim_cmd->add_flag("--json", sim_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval_cmd) {
      auto e = ncis::parse(eval_expr);
      if (eval_json) {
        nlohmann::json terms = nlohmann::json::object();
        for (const auto& [w, c] : e.terms()) terms[ncis::render(w)] = ncis::render(c);
        fmt::print("{}\n", nlohmann::json{{"input", eval_expr},
                                          {"canonical", ncis::render(e)},
                                          {"terms", terms}}
                               .dump(2));
      } else {
        fmt::print("{}\n", ncis::render(e));
      }
      return kExitOk;
    }

    if (*br_cmd) {
      auto a = ncis::parse(br_a);
      auto b = ncis::parse(br_b);
      std::string result = br_mode == "double" ? ncis::render(ncis::double_bracket(a, b))
                                               : ncis::render(ncis::loday_bracket(a, b));
      if (br_json)
        fmt::print("{}\n", nlohmann::json{{"a", br_a}, {"b", br_b}, {"mode", br_mode},
                                          {"result", result}}
                               .dump(2));
      else
        fmt::print("{}\n", result);
      return kExitOk;
    }

    if (*flow_cmd) {
      auto H = ncis::parse(flow_h);
      auto x = ncis::parse(flow_x);
      auto derivatives = ncis::taylor_flow(H, x, flow_order);
      if (flow_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& d : derivatives) arr.push_back(ncis::render(d));
        fmt::print("{}\n", nlohmann::json{{"H", flow_h}, {"x", flow_x},
                                          {"derivatives", arr}}
                               .dump(2));
      } else {
        for (std::size_t k = 0; k < derivatives.size(); ++k)
          fmt::print("D^{}(x) = {}\n", k, ncis::render(derivatives[k]));
      }
      return kExitOk;
    }

    if (*vf_cmd) {
      ncis::SuiteOptions opt{vf_samples, vf_max_len, vf_seed, !vf_serial};
      std::vector<ncis::IdentityReport> reports;
      if (suite == "leibniz") reports.push_back(ncis::run_leibniz_suite(opt));
      else if (suite == "cyclic") reports.push_back(ncis::run_cyclic_suite(opt));
      else if (suite == "skew") reports.push_back(ncis::run_skew_suite(opt));
      else if (suite == "jacobi") reports.push_back(ncis::run_jacobi_suite(opt));
      else if (suite == "casimir") reports.push_back(ncis::run_casimir_suite(opt));
      else if (suite == "involution") reports.push_back(ncis::run_involution_suite(vf_nm, std::max(10, vf_nm)));
      else if (suite == "lax") reports.push_back(ncis::run_lax_suite());
      else if (suite == "quadruple") reports.push_back(ncis::run_quadruple_suite());
      else reports = ncis::run_all_suites(opt, vf_nm);

      bool all_pass = true;
      if (vf_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(ncis::to_json(r));
        fmt::print("{}\n", arr.dump(2));
      }
      for (const auto& r : reports) {
        if (!vf_json) print_report(r, false);
        all_pass = all_pass && r.pass;
      }
      return all_pass ? kExitOk : kExitIdentityFailure;
    }

    if (*span_cmd) {
      auto report = ncis::span_experiment(span_kmax, span_degree);
      if (span_json) {
        fmt::print("{}\n", ncis::to_json(report).dump(2));
      } else {
        fmt::print("degree bound {} ({}), basis size {}\n", report.degree_bound,
                   report.degree_was_computed ? "computed" : "given", report.basis_size);
        for (const auto& e : report.entries) {
          std::string combo;
          for (const auto& [label, coef] : e.combination)
            combo += fmt::format(" {}*[{}]", coef, label);
          fmt::print("[{}] pi(Tr L^{}) lambda^{}{}\n", e.member ? "member" : "NOT member",
                     e.k, e.lambda_exp, combo);
        }
      }
      return report.all_member() ? kExitOk : kExitIdentityFailure;
    }

    if (*sim_cmd) {
      auto rep0 = ncis::random_rep(sim_n, sim_seed);
      auto traj = ncis::integrate(rep0, sim_T, sim_dt);
      auto lambdas = ncis::default_lambda_samples(sim_lambdas);
      auto report = ncis::conservation_report(traj, sim_kmax, lambdas);
      nlohmann::json j = ncis::to_json(report);
      bool ok = true;
      if (sim_backlund) {
        auto bk = ncis::backlund_check(rep0, sim_T, sim_dt);
        j["backlund"] = ncis::to_json(bk);
        if (!sim_json)
          fmt::print("backlund max deviation: {:.3e}\n", bk.max_deviation);
        if (sim_tol >= 0) ok = ok && bk.max_deviation <= 10 * sim_tol;
      }
      if (sim_order) {
        double order = ncis::convergence_order(rep0, sim_T, 8 * sim_dt, sim_kmax);
        j["convergence_order"] = order;
        if (!sim_json) fmt::print("convergence order (dt halving): {:.2f}\n", order);
        if (sim_tol >= 0) ok = ok && std::abs(order - 4.0) <= 0.5;
      }
      if (sim_json)
        fmt::print("{}\n", j.dump(2));
      else
        fmt::print("max relative drift: {:.3e} (n={}, T={}, dt={}, kmax={})\n",
                   report.max_drift(), sim_n, sim_T, sim_dt, sim_kmax);
      if (sim_tol >= 0) ok = ok && report.max_drift() <= sim_tol;
      return ok ? kExitOk : kExitIdentityFailure;
    }
  } catch (const ncis::GuardError& e) {
    fmt::print(stderr, "resource guard: {}\n", e.what());
    return kExitGuard;
  } catch (const ncis::ParseError& e) {
    fmt::print(stderr, "parse error: {}\n", e.what());
    return kExitInputError;
  } catch (const ncis::Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitInputError;
  }
  return kExitInputError;
}
