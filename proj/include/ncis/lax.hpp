#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ncis/cyclic.hpp"
#include "ncis/ratlinalg.hpp"

namespace ncis {

/// Laurent polynomial in the central spectral parameter lambda with
/// AlgebraElement coefficients.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(const AlgebraElement& e) { add_term(0, e); }

  static LambdaPoly lambda_power(int k, const AlgebraElement& e = AlgebraElement(1));

  const std::map<int, AlgebraElement>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  AlgebraElement coefficient(int k) const;

  void add_term(int lambda_exp, const AlgebraElement& e);

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);

  bool operator==(const LambdaPoly&) const = default;

 private:
  std::map<int, AlgebraElement> coeffs_;  // no zero values stored
};

/// Square matrix over A[lambda^±1]; lambda is central, entries do not commute.
class LaxMatrix {
 public:
  LaxMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LambdaPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const LambdaPoly& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  static LaxMatrix identity(std::size_t n);

  friend LaxMatrix operator*(const LaxMatrix& a, const LaxMatrix& b);
  friend LaxMatrix operator+(LaxMatrix a, const LaxMatrix& b);
  friend LaxMatrix operator-(LaxMatrix a, const LaxMatrix& b);
  bool operator==(const LaxMatrix&) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<LambdaPoly> entries_;
};

/// The 2x2 pair with dL/dt = [L, M].
LaxMatrix build_L();
LaxMatrix build_M();

LaxMatrix mat_commutator(const LaxMatrix& a, const LaxMatrix& b);
LambdaPoly mat_trace(const LaxMatrix& a);

/// Applies {H,_}_K to every lambda coefficient of every entry.
LaxMatrix mat_flow_derivative(const AlgebraElement& H, const LaxMatrix& X);

/// pi of every lambda coefficient of Tr(L^k).
std::map<int, CyclicElement> cyclic_trace_power(int k, int guard_k = 6);

struct SpanExperimentEntry {
  int k = 0;
  int lambda_exp = 0;
  bool member = false;
  // (basis monomial label, rational coefficient), nonzero entries only
  std::vector<std::pair<std::string, std::string>> combination;
};

struct SpanExperimentReport {
  int k_max = 0;
  int degree_bound = 0;
  std::size_t basis_size = 0;
  bool degree_was_computed = false;  // default bound from max word length of pi(Tr L^k_max)
  std::vector<SpanExperimentEntry> entries;
  bool all_member() const;
};

nlohmann::json to_json(const SpanExperimentReport& r);

/// Checks every lambda coefficient of pi(Tr L^k), k <= k_max, for membership
/// in the span of the degree-bounded {h, c, c^-1} monomial basis. When degree
/// is not given it is computed from the traces themselves.
SpanExperimentReport span_experiment(int k_max = 3, int degree_bound = -1);

}  // namespace ncis
