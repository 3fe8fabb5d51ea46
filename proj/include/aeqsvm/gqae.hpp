// Amplitude estimation with an arbitrary initial state.
//
// A problem is a unitary A, an initial state |Phi>, and a flag qubit whose
// value 1 marks the good basis states of |Psi> = A|Phi>. The amplification
// operator is
//
//     Q = -A S_Phi A^{-1} S_chi
//
// where S_chi negates good basis states and S_Phi reflects about |Phi>.
// Q rotates span{good, bad} by 2*theta with sin^2(theta) = a, the good-state
// probability; phase estimation of Q on |Psi> therefore reads out a.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aeqsvm/linear_operator.hpp"
#include "aeqsvm/statevector.hpp"

namespace aeqsvm {

struct GoodStatePredicate {
  int flag_qubit = 0;
  int good_value = 1;  // convention: flag 1 marks good states
};

struct GroverOperator {
  LinearOperator a_op;       // the problem operator A
  Statevector initial_state; // |Phi>, on A's qubit space
  GoodStatePredicate predicate;
};

// Unnormalized good/bad components of a state; good + bad == state exactly
// and a == <good|good>.
struct GoodBadSplit {
  Statevector good;
  Statevector bad;
  double a = 0.0;
};

inline GoodBadSplit split_good_bad(const Statevector& state, GoodStatePredicate predicate) {
  detail::check_qubit(state, predicate.flag_qubit, "split_good_bad");
  GoodBadSplit out;
  out.good.num_qubits = state.num_qubits;
  out.bad.num_qubits = state.num_qubits;
  out.good.amps.assign(state.dimension(), Complex{0.0, 0.0});
  out.bad.amps.assign(state.dimension(), Complex{0.0, 0.0});
  double a = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const bool good = static_cast<int>((i >> predicate.flag_qubit) & 1) == predicate.good_value;
    if (good) {
      out.good.amps[i] = state.amps[i];
      a += std::norm(state.amps[i]);
    } else {
      out.bad.amps[i] = state.amps[i];
    }
  }
  out.a = a;
  return out;
}

// One application of Q. Linear, so callers may pass unnormalized vectors
// (the controlled-power scratch path relies on this).
inline Statevector apply_q(const GroverOperator& op, Statevector state) {
  if (state.dimension() != op.initial_state.dimension())
    throw std::invalid_argument("apply_q: dimension mismatch");
  state = flip_sign_on_flag(std::move(state), op.predicate.flag_qubit, op.predicate.good_value);
  op.a_op.apply_inverse_in_place(state);
  state = reflect_about_state(std::move(state), op.initial_state);
  op.a_op.apply_in_place(state);
  for (Complex& a : state.amps) a = -a;
  return state;
}

// Q^{-1} = -S_chi A S_Phi A^{-1} (every factor of Q is an involution).
inline Statevector apply_q_dagger(const GroverOperator& op, Statevector state) {
  if (state.dimension() != op.initial_state.dimension())
    throw std::invalid_argument("apply_q_dagger: dimension mismatch");
  op.a_op.apply_inverse_in_place(state);
  state = reflect_about_state(std::move(state), op.initial_state);
  op.a_op.apply_in_place(state);
  state = flip_sign_on_flag(std::move(state), op.predicate.flag_qubit, op.predicate.good_value);
  for (Complex& a : state.amps) a = -a;
  return state;
}

inline Statevector apply_q_power(const GroverOperator& op, Statevector state, long j) {
  if (j < 0) throw std::invalid_argument("apply_q_power: negative power");
  for (long i = 0; i < j; ++i) state = apply_q(op, std::move(state));
  return state;
}

// Q materialized column by column as a dense operator on the problem's
// qubits, so it can be embedded in larger composite registers (e.g. under
// apply_controlled_power). Intended for small problems.
inline LinearOperator grover_operator_matrix(const GroverOperator& op) {
  const std::size_t dim = op.initial_state.dimension();
  std::vector<Complex> matrix(dim * dim);
  for (std::size_t c = 0; c < dim; ++c) {
    Statevector column = apply_q(op, basis_state(op.initial_state.num_qubits, c));
    for (std::size_t r = 0; r < dim; ++r) matrix[r * dim + c] = column.amps[r];
  }
  std::vector<int> qubits(op.initial_state.num_qubits);
  for (int q = 0; q < op.initial_state.num_qubits; ++q) qubits[q] = q;
  return LinearOperator::dense(std::move(matrix), std::move(qubits));
}

// Residuals of the two-eigenvector structure of Q on span{good, bad}:
// with |psi_pm> = (good/sqrt(a) pm i bad/sqrt(1-a))/sqrt(2),
//   Q|psi_pm> = exp(pm 2 i theta)|psi_pm>,  sin^2(theta) = a,
// and |Psi> = (-i/sqrt(2)) (e^{i theta}|psi_+> - e^{-i theta}|psi_->).
struct EigenpairReport {
  bool degenerate = false;  // a is 0 or 1; eigenvectors are not defined
  double a = 0.0;
  double theta = 0.0;            // in [0, pi/2]
  double max_residual = 0.0;     // eigen-relation residual over both vectors
  double decomposition_residual = 0.0;
};

inline EigenpairReport eigenpair_check(const GroverOperator& op) {
  const Statevector psi = op.a_op.apply(op.initial_state);
  const GoodBadSplit split = split_good_bad(psi, op.predicate);
  EigenpairReport report;
  report.a = split.a;
  constexpr double kDegenerate = 1e-12;
  if (split.a < kDegenerate || 1.0 - split.a < kDegenerate) {
    report.degenerate = true;
    return report;
  }
  const double theta = std::asin(std::min(1.0, std::sqrt(split.a)));
  report.theta = theta;

  const std::size_t dim = psi.dimension();
  const double ga = 1.0 / std::sqrt(2.0 * split.a);
  const double gb = 1.0 / std::sqrt(2.0 * (1.0 - split.a));
  Statevector plus = psi, minus = psi;
  for (std::size_t i = 0; i < dim; ++i) {
    const Complex g = split.good.amps[i] * ga;
    const Complex b = split.bad.amps[i] * gb * Complex{0.0, 1.0};
    plus.amps[i] = g + b;
    minus.amps[i] = g - b;
  }

  const Complex phase_plus = std::polar(1.0, 2.0 * theta);
  const Complex phase_minus = std::conj(phase_plus);
  const Statevector q_plus = apply_q(op, plus);
  const Statevector q_minus = apply_q(op, minus);
  double r_plus = 0.0, r_minus = 0.0, r_decomp = 0.0;
  const Complex c_plus = Complex{0.0, -1.0} / std::sqrt(2.0) * std::polar(1.0, theta);
  const Complex c_minus = Complex{0.0, -1.0} / std::sqrt(2.0) * std::polar(1.0, -theta);
  for (std::size_t i = 0; i < dim; ++i) {
    r_plus += std::norm(q_plus.amps[i] - phase_plus * plus.amps[i]);
    r_minus += std::norm(q_minus.amps[i] - phase_minus * minus.amps[i]);
    r_decomp += std::norm(psi.amps[i] - (c_plus * plus.amps[i] - c_minus * minus.amps[i]));
  }
  report.max_residual = std::sqrt(std::max(r_plus, r_minus));
  report.decomposition_residual = std::sqrt(r_decomp);
  return report;
}

enum class EstimationMode { kSample, kModal, kFullDistribution };

struct AEOutcome {
  int y = 0;       // measured counting-register value
  int h = 0;       // counting-register width
  double a_hat = 0.0;  // sin^2(pi * y / 2^h)
  std::vector<double> distribution;  // exact outcome probabilities (full mode)
};

inline int max_counting_qubits() { return 12; }

// Phase-estimation readout of the good-state probability.
//
// The composite state is built register by register: Hadamards put the
// counting register in uniform superposition, A prepares |Psi> on the work
// register, and the counting-controlled Q^{2^j} stages place Q^t|Psi> on the
// slice whose counting value is t. The slices are generated incrementally
// (one Q application per t), which is the same state the controlled-power
// gates produce, at 2^h instead of 2^{h+w} cost per Q. An exact inverse
// Fourier transform on the counting register then concentrates the
// distribution at y with pi*y/2^h close to plus/minus theta.
inline AEOutcome estimate_amplitude(const GroverOperator& op, int h, EstimationMode mode,
                                    std::uint64_t seed = 0) {
  if (h < 1 || h > max_counting_qubits())
    throw std::invalid_argument("estimate_amplitude: counting width out of range");
  const int work_qubits = op.initial_state.num_qubits;
  if (work_qubits + h > kMaxQubits)
    throw std::invalid_argument("estimate_amplitude: qubit budget exceeded");

  const std::size_t work_dim = op.initial_state.dimension();
  const std::size_t count_dim = std::size_t{1} << h;
  RegisterMap registers(work_qubits + h);
  registers.add("work", 0, work_qubits);
  registers.add("counting", work_qubits, h);

  Statevector joint = zero_state(work_qubits + h);
  joint.amps.assign(joint.dimension(), Complex{0.0, 0.0});
  Statevector work = op.a_op.apply(op.initial_state);
  const double scale = 1.0 / std::sqrt(static_cast<double>(count_dim));
  for (std::size_t t = 0; t < count_dim; ++t) {
    const std::size_t base = t << work_qubits;
    for (std::size_t i = 0; i < work_dim; ++i) joint.amps[base | i] = work.amps[i] * scale;
    if (t + 1 < count_dim) work = apply_q(op, std::move(work));
  }

  joint = inverse_qft(std::move(joint), registers, "counting");
  std::vector<double> dist = measurement_distribution(joint, registers, "counting");

  std::size_t modal = 0;
  for (std::size_t y = 1; y < dist.size(); ++y)
    if (dist[y] > dist[modal]) modal = y;  // ties resolve to the smaller y

  AEOutcome out;
  out.h = h;
  switch (mode) {
    case EstimationMode::kSample:
      out.y = static_cast<int>(sample_outcome(dist, seed));
      break;
    case EstimationMode::kModal:
      out.y = static_cast<int>(modal);
      break;
    case EstimationMode::kFullDistribution:
      out.y = static_cast<int>(modal);
      out.distribution = std::move(dist);
      break;
  }
  const double angle = kPi * static_cast<double>(out.y) / static_cast<double>(count_dim);
  const double s = std::sin(angle);
  out.a_hat = s * s;
  return out;
}

}  // namespace aeqsvm
