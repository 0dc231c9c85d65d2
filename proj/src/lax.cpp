#include "ncis/lax.hpp"

#include <nlohmann/json.hpp>

#include "ncis/dbracket.hpp"
#include "ncis/errors.hpp"
#include "ncis/parse.hpp"

namespace ncis {

LambdaPoly LambdaPoly::lambda_power(int k, const AlgebraElement& e) {
  LambdaPoly p;
  p.add_term(k, e);
  return p;
}

AlgebraElement LambdaPoly::coefficient(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? AlgebraElement() : it->second;
}

void LambdaPoly::add_term(int lambda_exp, const AlgebraElement& e) {
  if (e.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(lambda_exp, e);
  if (!inserted) {
    it->second += e;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  for (const auto& [k, e] : o.coeffs_) add_term(k, e);
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  for (const auto& [k, e] : o.coeffs_) add_term(k, -e);
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  LambdaPoly out;
  for (const auto& [ka, ea] : a.coeffs_)
    for (const auto& [kb, eb] : b.coeffs_) out.add_term(ka + kb, ea * eb);
  return out;
}

LaxMatrix LaxMatrix::identity(std::size_t n) {
  LaxMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LambdaPoly(AlgebraElement(1));
  return m;
}

bool LaxMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

LaxMatrix operator*(const LaxMatrix& a, const LaxMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix dimension mismatch");
  LaxMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
  return out;
}

LaxMatrix operator+(LaxMatrix a, const LaxMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) += b.at(i, j);
  return a;
}

LaxMatrix operator-(LaxMatrix a, const LaxMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= b.at(i, j);
  return a;
}

LaxMatrix build_L() {
  LaxMatrix L(2, 2);
  L.at(0, 0) = LambdaPoly(parse("v^-1 + u"));
  L.at(0, 1) = LambdaPoly(parse("v^-1*u^-1 + u^-1 + 1"));
  L.at(0, 1) += LambdaPoly::lambda_power(1, parse("v"));
  L.at(1, 0) = LambdaPoly(parse("v^-1"));
  L.at(1, 0) += LambdaPoly::lambda_power(-1, parse("u"));
  L.at(1, 1) = LambdaPoly(parse("v + v^-1*u^-1 + u^-1"));
  L.at(1, 1) += LambdaPoly::lambda_power(-1, parse("1"));
  return L;
}

LaxMatrix build_M() {
  LaxMatrix M(2, 2);
  M.at(0, 0) = LambdaPoly(parse("v^-1 - v + u"));
  M.at(0, 1) = LambdaPoly::lambda_power(1, parse("v"));
  M.at(1, 0) = LambdaPoly(parse("v^-1"));
  M.at(1, 1) = LambdaPoly(parse("u"));
  return M;
}

LaxMatrix mat_commutator(const LaxMatrix& a, const LaxMatrix& b) {
  return a * b - b * a;
}

LambdaPoly mat_trace(const LaxMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("trace of a non-square matrix");
  LambdaPoly out;
  for (std::size_t i = 0; i < a.rows(); ++i) out += a.at(i, i);
  return out;
}

LaxMatrix mat_flow_derivative(const AlgebraElement& H, const LaxMatrix& X) {
  LaxMatrix out(X.rows(), X.cols());
  for (std::size_t i = 0; i < X.rows(); ++i)
    for (std::size_t j = 0; j < X.cols(); ++j)
      for (const auto& [k, e] : X.at(i, j).coefficients())
        out.at(i, j).add_term(k, loday_bracket(H, e));
  return out;
}

std::map<int, CyclicElement> cyclic_trace_power(int k, int guard_k) {
  if (k < 1) throw DomainError("trace power must be >= 1");
  if (k > guard_k)
    throw GuardError("trace power " + std::to_string(k) + " exceeds guard " +
                     std::to_string(guard_k));
  const LaxMatrix L = build_L();
  LaxMatrix power = L;
  for (int i = 1; i < k; ++i) power = power * L;
  std::map<int, CyclicElement> out;
  const LambdaPoly trace = mat_trace(power);
  for (const auto& [exp, coeff] : trace.coefficients()) {
    CyclicElement image = project(coeff);
    if (!image.is_zero()) out.emplace(exp, std::move(image));
  }
  return out;
}

bool SpanExperimentReport::all_member() const {
  for (const auto& e : entries)
    if (!e.member) return false;
  return true;
}

nlohmann::json to_json(const SpanExperimentReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json combo = nlohmann::json::object();
    for (const auto& [label, coef] : e.combination) combo[label] = coef;
    entries.push_back({{"k", e.k},
                       {"lambda_exp", e.lambda_exp},
                       {"member", e.member},
                       {"coordinates", combo}});
  }
  return {{"k_max", r.k_max},
          {"degree_bound", r.degree_bound},
          {"degree_was_computed", r.degree_was_computed},
          {"basis_size", r.basis_size},
          {"all_member", r.all_member()},
          {"entries", entries}};
}

SpanExperimentReport span_experiment(int k_max, int degree_bound) {
  SpanExperimentReport report;
  report.k_max = k_max;

  std::vector<std::pair<int, std::map<int, CyclicElement>>> traces;
  std::size_t max_len = 0;
  for (int k = 1; k <= k_max; ++k) {
    auto tk = cyclic_trace_power(k);
    for (const auto& [exp, elem] : tk)
      for (const auto& [w, c] : elem.terms()) max_len = std::max(max_len, w.size());
    traces.emplace_back(k, std::move(tk));
  }

  if (degree_bound < 0) {
    degree_bound = static_cast<int>(max_len);
    report.degree_was_computed = true;
  }
  report.degree_bound = degree_bound;

  auto basis = enumerate_hc_basis_labeled(degree_bound);
  report.basis_size = basis.size();
  RowReducer reducer;
  for (const auto& b : basis) reducer.insert(b.element);

  for (const auto& [k, tk] : traces) {
    for (const auto& [exp, elem] : tk) {
      SpanExperimentEntry entry;
      entry.k = k;
      entry.lambda_exp = exp;
      if (auto coords = reducer.coordinates(elem)) {
        entry.member = true;
        for (std::size_t i = 0; i < coords->size(); ++i)
          if ((*coords)[i] != 0)
            entry.combination.emplace_back(basis[i].label, render((*coords)[i]));
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace ncis
