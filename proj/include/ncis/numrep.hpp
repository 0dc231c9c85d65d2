#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "ncis/algebra.hpp"

namespace ncis {

/// A point phi: A -> Mat(N, C), determined by the images of u and v.
struct NumericRep {
  Eigen::MatrixXcd U, V;
  int n() const { return static_cast<int>(U.rows()); }
};

double condition_number(const Eigen::MatrixXcd& m);

/// Entries i.i.d. uniform on the complex unit disc plus a 2*identity shift,
/// resampled until cond(U) and cond(V) stay below cond_bound.
NumericRep random_rep(int n, std::uint64_t seed, double cond_bound = 1e3);

/// Shares the LU factorizations of U and V across many evaluations.
class Evaluator {
 public:
  explicit Evaluator(const NumericRep& rep);
  Eigen::MatrixXcd operator()(const AlgebraElement& e) const;

 private:
  const NumericRep& rep_;
  Eigen::MatrixXcd u_inv_, v_inv_;  // solved against the identity, not inverted
};

Eigen::MatrixXcd evaluate(const AlgebraElement& e, const NumericRep& rep);

struct Trajectory {
  double dt = 0;
  std::vector<double> times;
  std::vector<NumericRep> states;  // one per accepted step, including t = 0
};

/// Fixed-step RK4 on dU/dt = UV - UV^-1 - V^-1, dV/dt = -VU + VU^-1 + U^-1.
/// Guards against blow-up and near-singular U, V along the way.
Trajectory integrate(const NumericRep& rep0, double T, double dt);

struct DriftSeries {
  std::string name;
  std::vector<double> rel_drift;  // one per recorded state
  double max_drift = 0;
};

struct ConservationReport {
  int n = 0;
  double T = 0, dt = 0;
  int k_max = 0;
  std::vector<std::complex<double>> lambdas;
  std::vector<double> times;
  std::vector<DriftSeries> series;
  double max_drift() const;
};

nlohmann::json to_json(const ConservationReport& r);

std::vector<std::complex<double>> default_lambda_samples(int count);

/// Drift of Tr phi(h)^k (k <= k_max), the phi(h) spectrum, the Casimir matrix
/// UVU^-1V^-1 and the spectrum of the 2N x 2N evaluation of L(lambda).
ConservationReport conservation_report(const Trajectory& traj, int k_max,
                                       const std::vector<std::complex<double>>& lambdas);

/// u -> u v u^-1, v -> u^-1 + v^-1 u^-1 applied to the matrices.
NumericRep backlund_transform(const NumericRep& rep);

struct BacklundReport {
  int n = 0;
  double T = 0, dt = 0;
  double max_deviation = 0;  // relative, between transformed and re-integrated
};

nlohmann::json to_json(const BacklundReport& r);

/// Integrates (U,V) and (U~,V~) independently and compares the transformed
/// trajectory against the independently integrated one.
BacklundReport backlund_check(const NumericRep& rep0, double T, double dt);

/// log2 ratio of Tr phi(h)^k drifts at dt and dt/2; ~4 for RK4.
double convergence_order(const NumericRep& rep0, double T, double dt, int k_max);

}  // namespace ncis
