#include "ncis/numrep.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "ncis/errors.hpp"
#include "ncis/lax.hpp"
#include "ncis/random.hpp"

namespace ncis {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using std::complex;

double uniform01(Rng& rng) {
  return static_cast<double>(rng.below(1ull << 53)) / static_cast<double>(1ull << 53);
}

complex<double> unit_disc(Rng& rng) {
  for (;;) {
    double re = 2 * uniform01(rng) - 1, im = 2 * uniform01(rng) - 1;
    if (re * re + im * im <= 1.0) return {re, im};
  }
}

MatrixXcd solve_inverse(const MatrixXcd& m) {
  return m.partialPivLu().solve(MatrixXcd::Identity(m.rows(), m.cols()));
}

struct Deriv {
  MatrixXcd dU, dV;
};

Deriv rhs(const MatrixXcd& U, const MatrixXcd& V) {
  MatrixXcd Ui = solve_inverse(U);
  MatrixXcd Vi = solve_inverse(V);
  return {U * V - U * Vi - Vi, -(V * U) + V * Ui + Ui};
}

// greedy nearest matching against the reference spectrum; max |pair difference|
double spectrum_distance(const VectorXcd& ref, VectorXcd cur) {
  double worst = 0;
  std::vector<bool> used(static_cast<std::size_t>(cur.size()), false);
  for (Eigen::Index i = 0; i < ref.size(); ++i) {
    double best = std::numeric_limits<double>::max();
    Eigen::Index best_j = -1;
    for (Eigen::Index j = 0; j < cur.size(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      double d = std::abs(ref[i] - cur[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    used[static_cast<std::size_t>(best_j)] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

VectorXcd spectrum(const MatrixXcd& m) {
  Eigen::ComplexEigenSolver<MatrixXcd> es(m, /*computeEigenvectors=*/false);
  return es.eigenvalues();
}

double spectrum_scale(const VectorXcd& ref) {
  double s = 1.0;
  for (Eigen::Index i = 0; i < ref.size(); ++i) s = std::max(s, std::abs(ref[i]));
  return s;
}

}  // namespace

// 2N x 2N numeric evaluation of the symbolic L(lambda)
static MatrixXcd lax_numeric(const Evaluator& eval, int n, complex<double> lambda) {
  const LaxMatrix& L = [] () -> const LaxMatrix& {
    static const LaxMatrix l = build_L();
    return l;
  }();
  MatrixXcd out = MatrixXcd::Zero(2 * n, 2 * n);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      MatrixXcd block = MatrixXcd::Zero(n, n);
      for (const auto& [e, coeff] : L.at(i, j).coefficients())
        block += std::pow(lambda, e) * eval(coeff);
      out.block(static_cast<Eigen::Index>(i) * n, static_cast<Eigen::Index>(j) * n, n,
                n) = block;
    }
  return out;
}

double condition_number(const MatrixXcd& m) {
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  double smin = svd.singularValues().minCoeff();
  if (smin == 0) return std::numeric_limits<double>::infinity();
  return svd.singularValues().maxCoeff() / smin;
}

NumericRep random_rep(int n, std::uint64_t seed, double cond_bound) {
  Rng rng(sample_seed(seed, 0xabcdef));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    MatrixXcd U(n, n), V(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        U(i, j) = unit_disc(rng) + (i == j ? complex<double>(2, 0) : 0.0);
        V(i, j) = unit_disc(rng) + (i == j ? complex<double>(2, 0) : 0.0);
      }
    if (condition_number(U) <= cond_bound && condition_number(V) <= cond_bound)
      return {std::move(U), std::move(V)};
  }
  throw GuardError("could not sample a well-conditioned representation");
}

Evaluator::Evaluator(const NumericRep& rep) : rep_(rep) {
  u_inv_ = solve_inverse(rep.U);
  v_inv_ = solve_inverse(rep.V);
}

MatrixXcd Evaluator::operator()(const AlgebraElement& e) const {
  const int n = rep_.n();
  MatrixXcd acc = MatrixXcd::Zero(n, n);
  for (const auto& [w, c] : e.terms()) {
    MatrixXcd m = MatrixXcd::Identity(n, n);
    for (std::size_t i = 0; i < w.size(); ++i) {
      switch (w.letter(i)) {
        case Letter::u: m = m * rep_.U; break;
        case Letter::uinv: m = m * u_inv_; break;
        case Letter::v: m = m * rep_.V; break;
        case Letter::vinv: m = m * v_inv_; break;
      }
    }
    acc += c.convert_to<double>() * m;
  }
  return acc;
}

MatrixXcd evaluate(const AlgebraElement& e, const NumericRep& rep) {
  return Evaluator(rep)(e);
}

Trajectory integrate(const NumericRep& rep0, double T, double dt) {
  if (!(dt > 0) || !(T > 0)) throw DomainError("integrate requires T > 0 and dt > 0");
  const double blowup = 1e8;
  const double cond_limit = 1e12;

  Trajectory traj;
  traj.dt = dt;
  const long steps = std::lround(T / dt);
  traj.times.reserve(static_cast<std::size_t>(steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(steps) + 1);

  MatrixXcd U = rep0.U, V = rep0.V;
  traj.times.push_back(0.0);
  traj.states.push_back({U, V});

  for (long s = 1; s <= steps; ++s) {
    Deriv k1 = rhs(U, V);
    Deriv k2 = rhs(U + 0.5 * dt * k1.dU, V + 0.5 * dt * k1.dV);
    Deriv k3 = rhs(U + 0.5 * dt * k2.dU, V + 0.5 * dt * k2.dV);
    Deriv k4 = rhs(U + dt * k3.dU, V + dt * k3.dV);
    U += dt / 6.0 * (k1.dU + 2 * k2.dU + 2 * k3.dU + k4.dU);
    V += dt / 6.0 * (k1.dV + 2 * k2.dV + 2 * k3.dV + k4.dV);

    if (!U.allFinite() || !V.allFinite() || U.norm() > blowup || V.norm() > blowup)
      throw GuardError("trajectory blow-up at t = " + std::to_string(s * dt));
    if (condition_number(U) > cond_limit || condition_number(V) > cond_limit)
      throw GuardError("U or V became numerically singular at t = " +
                       std::to_string(s * dt));

    traj.times.push_back(s * dt);
    traj.states.push_back({U, V});
  }
  return traj;
}

double ConservationReport::max_drift() const {
  double m = 0;
  for (const auto& s : series) m = std::max(m, s.max_drift);
  return m;
}

std::vector<complex<double>> default_lambda_samples(int count) {
  std::vector<complex<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    double angle = 2.0 * M_PI * (j + 0.37) / count;
    out.push_back(1.3 * complex<double>(std::cos(angle), std::sin(angle)));
  }
  return out;
}

ConservationReport conservation_report(const Trajectory& traj, int k_max,
                                       const std::vector<complex<double>>& lambdas) {
  ConservationReport report;
  if (traj.states.empty()) return report;
  report.n = traj.states.front().n();
  report.dt = traj.dt;
  report.T = traj.times.back();
  report.k_max = k_max;
  report.lambdas = lambdas;
  report.times = traj.times;

  const AlgebraElement h = hamiltonian_h();
  const AlgebraElement c = casimir_c();

  // references at t = 0
  Evaluator eval0(traj.states.front());
  MatrixXcd h0 = eval0(h);
  std::vector<complex<double>> tr0(static_cast<std::size_t>(k_max));
  {
    MatrixXcd p = MatrixXcd::Identity(h0.rows(), h0.cols());
    for (int k = 1; k <= k_max; ++k) {
      p = p * h0;
      tr0[static_cast<std::size_t>(k - 1)] = p.trace();
    }
  }
  VectorXcd eig_h0 = spectrum(h0);
  MatrixXcd c0 = eval0(c);
  std::vector<VectorXcd> eig_l0;
  for (auto lambda : lambdas)
    eig_l0.push_back(spectrum(lax_numeric(eval0, report.n, lambda)));

  for (int k = 1; k <= k_max; ++k)
    report.series.push_back({"tr_h^" + std::to_string(k), {}, 0});
  report.series.push_back({"eig_h", {}, 0});
  report.series.push_back({"casimir_matrix", {}, 0});
  for (std::size_t j = 0; j < lambdas.size(); ++j)
    report.series.push_back({"eig_L_lambda" + std::to_string(j), {}, 0});

  const double c0_norm = std::max(1.0, c0.norm());
  const double eig_h_scale = spectrum_scale(eig_h0);

  for (const auto& state : traj.states) {
    Evaluator eval(state);
    MatrixXcd ht = eval(h);
    MatrixXcd p = MatrixXcd::Identity(ht.rows(), ht.cols());
    for (int k = 1; k <= k_max; ++k) {
      p = p * ht;
      double scale = std::max(1.0, std::abs(tr0[static_cast<std::size_t>(k - 1)]));
      report.series[static_cast<std::size_t>(k - 1)].rel_drift.push_back(
          std::abs(p.trace() - tr0[static_cast<std::size_t>(k - 1)]) / scale);
    }
    report.series[static_cast<std::size_t>(k_max)].rel_drift.push_back(
        spectrum_distance(eig_h0, spectrum(ht)) / eig_h_scale);
    report.series[static_cast<std::size_t>(k_max) + 1].rel_drift.push_back(
        (eval(c) - c0).norm() / c0_norm);
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
      VectorXcd eig = spectrum(lax_numeric(eval, report.n, lambdas[j]));
      report.series[static_cast<std::size_t>(k_max) + 2 + j].rel_drift.push_back(
          spectrum_distance(eig_l0[j], eig) / spectrum_scale(eig_l0[j]));
    }
  }

  for (auto& s : report.series)
    s.max_drift = s.rel_drift.empty()
                      ? 0
                      : *std::max_element(s.rel_drift.begin(), s.rel_drift.end());
  return report;
}

nlohmann::json to_json(const ConservationReport& r) {
  nlohmann::json lambdas = nlohmann::json::array();
  for (auto l : r.lambdas) lambdas.push_back({l.real(), l.imag()});
  nlohmann::json series = nlohmann::json::object();
  // stride long series down to ~200 samples
  std::size_t stride = std::max<std::size_t>(1, r.times.size() / 200);
  for (const auto& s : r.series) {
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t i = 0; i < s.rel_drift.size(); i += stride)
      pts.push_back({r.times[i], s.rel_drift[i]});
    series[s.name] = {{"max_rel_drift", s.max_drift}, {"series", pts}};
  }
  return {{"n", r.n},         {"T", r.T},
          {"dt", r.dt},       {"k_max", r.k_max},
          {"lambdas", lambdas}, {"max_rel_drift", r.max_drift()},
          {"quantities", series}};
}

NumericRep backlund_transform(const NumericRep& rep) {
  MatrixXcd ui = solve_inverse(rep.U);
  MatrixXcd vi = solve_inverse(rep.V);
  return {rep.U * rep.V * ui, ui + vi * ui};
}

nlohmann::json to_json(const BacklundReport& r) {
  return {{"n", r.n}, {"T", r.T}, {"dt", r.dt}, {"max_deviation", r.max_deviation}};
}

BacklundReport backlund_check(const NumericRep& rep0, double T, double dt) {
  NumericRep transformed0 = backlund_transform(rep0);
  if (condition_number(transformed0.V) > 1e9)
    throw DomainError("singular transformed initial data");

  Trajectory base = integrate(rep0, T, dt);
  Trajectory mapped = integrate(transformed0, T, dt);

  double scale = std::max({1.0, transformed0.U.norm(), transformed0.V.norm()});
  double worst = 0;
  for (std::size_t i = 0; i < base.states.size(); ++i) {
    NumericRep expect = backlund_transform(base.states[i]);
    double dev = std::max((expect.U - mapped.states[i].U).norm(),
                          (expect.V - mapped.states[i].V).norm());
    worst = std::max(worst, dev / scale);
  }
  return {rep0.n(), T, dt, worst};
}

double convergence_order(const NumericRep& rep0, double T, double dt, int k_max) {
  auto max_tr_drift = [&](double step) {
    Trajectory traj = integrate(rep0, T, step);
    auto report = conservation_report(traj, k_max, {});
    double m = 0;
    for (int k = 1; k <= k_max; ++k)
      m = std::max(m, report.series[static_cast<std::size_t>(k - 1)].max_drift);
    return m;
  };
  double coarse = max_tr_drift(dt);
  double fine = max_tr_drift(dt / 2);
  return std::log2(coarse / fine);
}

}  // namespace ncis
