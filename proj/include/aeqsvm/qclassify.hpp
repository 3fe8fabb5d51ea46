// Classification by amplitude estimation.
//
// The trained model and the query are amplitude-encoded into two oracle
// states on an (index x feature) register pair:
//
//   |mu> ~ b|0>|0> + sum_k alpha_k |x_k| |k>|x_k>     (training oracle)
//   |x~> ~   |0>|0> + sum_k |x| |k>|x>                (query state)
//
// A fresh ancilla and flag qubit build phi0 = (|0>|mu> - |1>|x~>)|0>/sqrt(2);
// after A1 = (controlled-X on the flag) . (H on the ancilla), the good-state
// probability is a = (1 - <mu|x~>)/2, so amplitude estimation of a recovers
// the inner product and with it the classifier sign, since <mu|x~> has the
// sign of the classical margin.
//
// Register layout (little-endian): flag = qubit 0, feature qubits next, then
// index qubits, ancilla on top. Oracle states live on the payload
// (feature + index) registers only; phi0 embeds them.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aeqsvm/gqae.hpp"
#include "aeqsvm/linear_operator.hpp"
#include "aeqsvm/numeric.hpp"
#include "aeqsvm/statevector.hpp"
#include "aeqsvm/svm.hpp"

namespace aeqsvm {

struct OracleState {
  Statevector state;          // unit-norm payload state
  double normalization = 0.0; // squared pre-normalization weight (N)
};

namespace detail {

inline double squared_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace detail

inline int feature_qubits_for(int n) { return ceil_log2_int(static_cast<std::uint64_t>(n)); }
inline int index_qubits_for(int m) { return ceil_log2_int(static_cast<std::uint64_t>(m) + 1); }

// Training-data oracle: b on (index 0, feature 0), alpha_k (x_k)_j on
// (index k, feature j). Normalization is b^2 + sum alpha_k^2 |x_k|^2.
inline OracleState build_mu_tilde(const SvmModel& model, const TrainingSet& ts) {
  validate_features(ts);
  const int m = ts.size();
  if (static_cast<int>(model.alpha.size()) != m)
    throw std::invalid_argument("build_mu_tilde: model/training size mismatch");
  const int f = feature_qubits_for(ts.dim());
  const int d = index_qubits_for(m);
  std::vector<Complex> amps(std::size_t{1} << (f + d), Complex{0.0, 0.0});
  amps[0] = Complex{model.b, 0.0};
  double n_mu = model.b * model.b;
  for (int k = 1; k <= m; ++k) {
    const std::vector<double>& row = ts.vectors[k - 1];
    for (int j = 0; j < ts.dim(); ++j)
      amps[(std::size_t{1} * k << f) | static_cast<std::size_t>(j)] =
          Complex{model.alpha[k - 1] * row[j], 0.0};
    n_mu += model.alpha[k - 1] * model.alpha[k - 1] * detail::squared_norm(row);
  }
  if (n_mu <= 0.0) throw NumericalError("build_mu_tilde: zero oracle normalization");
  OracleState out;
  out.normalization = n_mu;
  const double inv = 1.0 / std::sqrt(n_mu);
  for (Complex& a : amps) a *= inv;
  out.state.num_qubits = f + d;
  out.state.amps = std::move(amps);
  return out;
}

// Query state: 1 on (index 0, feature 0) and |x| on (index k, feature |x>)
// for every k; normalization m|x|^2 + 1 makes it an honest unit vector.
inline OracleState build_x_tilde(const std::vector<double>& query, int m) {
  if (m < 1) throw std::invalid_argument("build_x_tilde: need at least one index slot");
  if (query.empty()) throw std::invalid_argument("build_x_tilde: empty query");
  const double x_sq = detail::squared_norm(query);
  if (x_sq <= 0.0) throw std::invalid_argument("build_x_tilde: zero query vector");
  const int f = feature_qubits_for(static_cast<int>(query.size()));
  const int d = index_qubits_for(m);
  std::vector<Complex> amps(std::size_t{1} << (f + d), Complex{0.0, 0.0});
  amps[0] = Complex{1.0, 0.0};
  for (int k = 1; k <= m; ++k)
    for (std::size_t j = 0; j < query.size(); ++j)
      amps[(std::size_t{1} * k << f) | j] = Complex{query[j], 0.0};
  const double n_z = static_cast<double>(m) * x_sq + 1.0;
  OracleState out;
  out.normalization = n_z;
  const double inv = 1.0 / std::sqrt(n_z);
  for (Complex& a : amps) a *= inv;
  out.state.num_qubits = f + d;
  out.state.amps = std::move(amps);
  return out;
}

struct OracleStates {
  OracleState mu_tilde;
  OracleState x_tilde;
};

inline OracleStates build_oracle_states(const SvmModel& model, const TrainingSet& ts,
                                        const std::vector<double>& query) {
  if (static_cast<int>(query.size()) != ts.dim())
    throw std::invalid_argument("build_oracle_states: query dimension mismatch");
  return OracleStates{build_mu_tilde(model, ts), build_x_tilde(query, ts.size())};
}

// Closed-form inner product of the two oracle states, evaluated directly
// from the model and data; test oracle for the state-level construction.
inline double oracle_inner_closed_form(const SvmModel& model, const TrainingSet& ts,
                                       const std::vector<double>& query) {
  const double x_sq = detail::squared_norm(query);
  double sum = model.b;
  double n_mu = model.b * model.b;
  for (int k = 0; k < ts.size(); ++k) {
    double dot = 0.0;
    for (int j = 0; j < ts.dim(); ++j) dot += ts.vectors[k][j] * query[j];
    sum += model.alpha[k] * dot;  // alpha_k |x_k| |x| (xhat_k . xhat)
    n_mu += model.alpha[k] * model.alpha[k] * detail::squared_norm(ts.vectors[k]);
  }
  const double n_z = static_cast<double>(ts.size()) * x_sq + 1.0;
  return sum / std::sqrt(n_mu * n_z);
}

struct ClassifierCircuit {
  Statevector phi0;          // (payload + 2)-qubit initial state
  LinearOperator a1_op;      // Hadamard on the ancilla, then flag flip on ancilla 0
  GoodStatePredicate predicate;  // flag qubit 0, good value 1
};

// phi0 = (|0>|mu> - |1>|x~>) |0> / sqrt(2) with a fresh top ancilla and the
// flag at qubit 0.
inline ClassifierCircuit build_phi0(const Statevector& mu, const Statevector& x) {
  if (mu.num_qubits != x.num_qubits || mu.dimension() != x.dimension())
    throw std::invalid_argument("build_phi0: oracle state shape mismatch");
  const int payload = mu.num_qubits;
  const int ancilla = payload + 1;
  Statevector phi0 = zero_state(payload + 2);
  phi0.amps.assign(phi0.dimension(), Complex{0.0, 0.0});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::size_t anc_mask = std::size_t{1} << ancilla;
  for (std::size_t p = 0; p < mu.dimension(); ++p) {
    phi0.amps[p << 1] = mu.amps[p] * inv_sqrt2;
    phi0.amps[anc_mask | (p << 1)] = -x.amps[p] * inv_sqrt2;
  }
  ClassifierCircuit circuit{
      std::move(phi0),
      LinearOperator::sequence({LinearOperator::hadamard(ancilla),
                                LinearOperator::controlled_x(ancilla, 0, 0)}),
      GoodStatePredicate{0, 1}};
  return circuit;
}

inline Statevector apply_a1(const ClassifierCircuit& circuit) {
  return circuit.a1_op.apply(circuit.phi0);
}

struct ClassificationResult {
  double a_hat = 0.0;
  double inner_estimate = 0.0;  // 1 - 2 a_hat
  int label = 1;
  bool boundary = false;  // |inner_estimate| below the 2^{2-h} resolution
  double exact_inner = 0.0;
  int y = 0;
  int h = 0;
  std::vector<double> distribution;  // full-distribution mode only
};

inline ClassificationResult classify_quantum(const SvmModel& model, const TrainingSet& ts,
                                             const std::vector<double>& query, int h,
                                             EstimationMode mode, std::uint64_t seed = 0) {
  const OracleStates oracles = build_oracle_states(model, ts, query);
  ClassifierCircuit circuit = build_phi0(oracles.mu_tilde.state, oracles.x_tilde.state);

  const Complex exact = inner_product(oracles.mu_tilde.state, oracles.x_tilde.state);
  if (std::abs(exact.imag()) > 1e-12)
    throw NumericalError("classify_quantum: oracle inner product is not real");

  const int work_qubits = circuit.phi0.num_qubits;
  if (work_qubits + h > kMaxQubits)
    throw std::invalid_argument("classify_quantum: qubit budget exceeded");

  GroverOperator op{std::move(circuit.a1_op), std::move(circuit.phi0), circuit.predicate};
  AEOutcome outcome = estimate_amplitude(op, h, mode, seed);

  ClassificationResult result;
  result.distribution = std::move(outcome.distribution);
  result.a_hat = outcome.a_hat;
  result.y = outcome.y;
  result.h = outcome.h;
  result.inner_estimate = 1.0 - 2.0 * outcome.a_hat;
  result.exact_inner = exact.real();
  const double resolution = std::ldexp(1.0, 2 - h);  // 2^{-h+2}
  result.boundary = std::abs(result.inner_estimate) < resolution;
  result.label = result.inner_estimate < 0.0 ? -1 : 1;
  return result;
}

}  // namespace aeqsvm
