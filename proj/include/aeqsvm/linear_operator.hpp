// Opaque unitary actions on statevectors. An operator is a forward/inverse
// pair of linear actions plus the set of qubits it may touch; concrete
// operators come from a dense matrix, a primitive gate, or a composition.
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aeqsvm/statevector.hpp"

namespace aeqsvm {

namespace detail {

// Applies a dense matrix (row-major, dimension 2^k) to the subspace spanned
// by `qubits`; qubits[j] is bit j of the matrix index. Linear, so it is also
// valid on unnormalized scratch vectors.
inline void apply_dense_matrix(Statevector& state, const std::vector<Complex>& matrix,
                               const std::vector<int>& qubits) {
  const int k = static_cast<int>(qubits.size());
  const std::size_t sub = std::size_t{1} << k;
  std::size_t union_mask = 0;
  for (int q : qubits) {
    check_qubit(state, q, "dense operator");
    union_mask |= std::size_t{1} << q;
  }
  // spread[s] places the k-bit sub-index s onto the operator's qubits
  std::vector<std::size_t> spread(sub, 0);
  for (std::size_t s = 0; s < sub; ++s)
    for (int j = 0; j < k; ++j)
      if ((s >> j) & 1) spread[s] |= std::size_t{1} << qubits[j];
  std::vector<Complex> x(sub), y(sub);
  for (std::size_t outer = 0; outer < state.dimension(); ++outer) {
    if (outer & union_mask) continue;
    for (std::size_t s = 0; s < sub; ++s) x[s] = state.amps[outer | spread[s]];
    for (std::size_t r = 0; r < sub; ++r) {
      Complex acc{0.0, 0.0};
      const Complex* row = matrix.data() + r * sub;
      for (std::size_t c = 0; c < sub; ++c) acc += row[c] * x[c];
      y[r] = acc;
    }
    for (std::size_t s = 0; s < sub; ++s) state.amps[outer | spread[s]] = y[s];
  }
}

inline std::vector<Complex> adjoint_matrix(const std::vector<Complex>& matrix, std::size_t dim) {
  std::vector<Complex> adj(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) adj[c * dim + r] = std::conj(matrix[r * dim + c]);
  return adj;
}

inline double max_unitarity_defect(const std::vector<Complex>& matrix, std::size_t dim) {
  double defect = 0.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < dim; ++k)
        acc += std::conj(matrix[k * dim + r]) * matrix[k * dim + c];
      if (r == c) acc -= 1.0;
      defect = std::max(defect, std::abs(acc));
    }
  }
  return defect;
}

}  // namespace detail

class LinearOperator {
 public:
  using Action = std::function<void(Statevector&)>;

  LinearOperator(std::vector<int> support, Action forward, Action inverse)
      : support_(std::move(support)),
        forward_(std::move(forward)),
        inverse_(std::move(inverse)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
    if (!forward_ || !inverse_) throw std::invalid_argument("LinearOperator: missing action");
  }

  void apply_in_place(Statevector& state) const { forward_(state); }
  void apply_inverse_in_place(Statevector& state) const { inverse_(state); }

  Statevector apply(Statevector state) const {
    forward_(state);
    return state;
  }
  Statevector apply_inverse(Statevector state) const {
    inverse_(state);
    return state;
  }

  const std::vector<int>& support() const { return support_; }

  bool touches(int qubit) const {
    return std::binary_search(support_.begin(), support_.end(), qubit);
  }

  // Dense unitary on the given qubits (row-major, dimension 2^{|qubits|}).
  // Rejects non-unitary matrices so forward/inverse stay exact partners.
  static LinearOperator dense(std::vector<Complex> matrix, std::vector<int> qubits) {
    const std::size_t dim = std::size_t{1} << qubits.size();
    if (matrix.size() != dim * dim)
      throw std::invalid_argument("LinearOperator::dense: matrix size mismatch");
    if (detail::max_unitarity_defect(matrix, dim) > 1e-10)
      throw std::invalid_argument("LinearOperator::dense: matrix is not unitary");
    auto fwd_matrix = std::make_shared<const std::vector<Complex>>(std::move(matrix));
    auto inv_matrix =
        std::make_shared<const std::vector<Complex>>(detail::adjoint_matrix(*fwd_matrix, dim));
    auto qs = std::make_shared<const std::vector<int>>(qubits);
    return LinearOperator(
        std::move(qubits),
        [fwd_matrix, qs](Statevector& s) { detail::apply_dense_matrix(s, *fwd_matrix, *qs); },
        [inv_matrix, qs](Statevector& s) { detail::apply_dense_matrix(s, *inv_matrix, *qs); });
  }

  static LinearOperator hadamard(int qubit) {
    auto act = [qubit](Statevector& s) { s = apply_hadamard(std::move(s), qubit); };
    return LinearOperator({qubit}, act, act);
  }

  static LinearOperator pauli_x(int qubit) {
    auto act = [qubit](Statevector& s) { s = apply_pauli_x(std::move(s), qubit); };
    return LinearOperator({qubit}, act, act);
  }

  static LinearOperator controlled_x(int control, int control_value, int target) {
    auto act = [control, control_value, target](Statevector& s) {
      s = apply_controlled_x(std::move(s), control, control_value, target);
    };
    return LinearOperator({control, target}, act, act);
  }

  // steps[0] is applied first; the inverse runs the inverses in reverse.
  static LinearOperator sequence(std::vector<LinearOperator> steps) {
    std::vector<int> support;
    for (const LinearOperator& step : steps)
      support.insert(support.end(), step.support().begin(), step.support().end());
    auto shared = std::make_shared<const std::vector<LinearOperator>>(std::move(steps));
    return LinearOperator(
        std::move(support),
        [shared](Statevector& s) {
          for (const LinearOperator& step : *shared) step.apply_in_place(s);
        },
        [shared](Statevector& s) {
          for (auto it = shared->rbegin(); it != shared->rend(); ++it)
            it->apply_inverse_in_place(s);
        });
  }

 private:
  std::vector<int> support_;
  Action forward_;
  Action inverse_;
};

// Applies op^power to the sub-block where the control bit is 1 and leaves the
// control-0 sub-block untouched. Works for any linear op disjoint from the
// control: the control-1 amplitudes are masked into a scratch vector, the op
// acts on the scratch, and the result is written back.
inline Statevector apply_controlled_power(Statevector state, int control,
                                          const LinearOperator& op, long power) {
  detail::check_qubit(state, control, "apply_controlled_power");
  if (power < 0) throw std::invalid_argument("apply_controlled_power: negative power");
  if (op.touches(control))
    throw std::invalid_argument("apply_controlled_power: control overlaps operator support");
  for (int q : op.support()) detail::check_qubit(state, q, "apply_controlled_power");
  if (power == 0) return state;

  const std::size_t cmask = std::size_t{1} << control;
  Statevector scratch = state;
  for (std::size_t i = 0; i < scratch.dimension(); ++i)
    if (!(i & cmask)) scratch.amps[i] = Complex{0.0, 0.0};
  for (long p = 0; p < power; ++p) op.apply_in_place(scratch);
  for (std::size_t i = 0; i < state.dimension(); ++i)
    if (i & cmask) state.amps[i] = scratch.amps[i];
  return state;
}

}  // namespace aeqsvm
