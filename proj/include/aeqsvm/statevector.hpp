// Statevector simulation substrate: registers, single-qubit and controlled
// gates, exact Fourier transforms on sub-registers, reflections, and exact
// measurement statistics.
//
// Conventions used throughout the library:
//   * little-endian qubit order: qubit 0 is the least significant bit of a
//     basis index, so basis index i has qubit q in state (i >> q) & 1;
//   * amplitudes are complex<double>; no configurable precision;
//   * public operations are value-in / value-out and never renormalize --
//     unitarity keeps the norm at 1, and internal helpers stay linear so
//     they remain valid on unnormalized scratch vectors.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aeqsvm/errors.hpp"

namespace aeqsvm {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// 2^24 complex doubles is ~256 MB, the desk-scale ceiling.
inline constexpr int kMaxQubits = 24;

struct Statevector {
  int num_qubits = 0;
  std::vector<Complex> amps{Complex{1.0, 0.0}};

  std::size_t dimension() const { return amps.size(); }
};

inline double norm_l2(const Statevector& state) {
  double s = 0.0;
  for (const Complex& a : state.amps) s += std::norm(a);
  return std::sqrt(s);
}

inline Statevector zero_state(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count out of range");
  Statevector s;
  s.num_qubits = num_qubits;
  s.amps.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  s.amps[0] = Complex{1.0, 0.0};
  return s;
}

inline Statevector basis_state(int num_qubits, std::size_t index) {
  Statevector s = zero_state(num_qubits);
  if (index >= s.dimension()) throw std::out_of_range("basis index out of range");
  s.amps[0] = Complex{0.0, 0.0};
  s.amps[index] = Complex{1.0, 0.0};
  return s;
}

// Normalizes an arbitrary amplitude vector into a Statevector.
// The length must be a power of two ("bad dimension") and the vector must
// have nonzero norm ("unnormalizable").
inline Statevector prepare_state(std::vector<Complex> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("bad dimension: length must be a power of two");
  int q = 0;
  while ((std::size_t{1} << q) < n) ++q;
  if (q > kMaxQubits) throw std::invalid_argument("bad dimension: exceeds qubit ceiling");
  double s = 0.0;
  for (const Complex& a : amplitudes) s += std::norm(a);
  if (s <= 0.0) throw std::invalid_argument("unnormalizable: zero vector");
  const double inv = 1.0 / std::sqrt(s);
  for (Complex& a : amplitudes) a *= inv;
  Statevector out;
  out.num_qubits = q;
  out.amps = std::move(amplitudes);
  return out;
}

inline Statevector prepare_state(const std::vector<double>& amplitudes) {
  std::vector<Complex> c(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i) c[i] = Complex{amplitudes[i], 0.0};
  return prepare_state(std::move(c));
}

namespace detail {

inline void check_qubit(const Statevector& state, int qubit, const char* what) {
  if (qubit < 0 || qubit >= state.num_qubits)
    throw std::out_of_range(std::string(what) + ": qubit index out of range");
}

}  // namespace detail

inline Statevector apply_hadamard(Statevector state, int qubit) {
  detail::check_qubit(state, qubit, "apply_hadamard");
  const std::size_t dim = state.dimension();
  const std::size_t half = std::size_t{1} << qubit;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t base = 0; base < dim; base += 2 * half) {
    for (std::size_t i = 0; i < half; ++i) {
      const Complex a = state.amps[base + i];
      const Complex b = state.amps[base + i + half];
      state.amps[base + i] = (a + b) * inv_sqrt2;
      state.amps[base + i + half] = (a - b) * inv_sqrt2;
    }
  }
  return state;
}

inline Statevector apply_pauli_x(Statevector state, int qubit) {
  detail::check_qubit(state, qubit, "apply_pauli_x");
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const std::size_t j = i ^ mask;
    if (i < j) std::swap(state.amps[i], state.amps[j]);
  }
  return state;
}

// X on `target`, applied on exactly those basis states whose control bit
// equals `control_value` (0 or 1).
inline Statevector apply_controlled_x(Statevector state, int control, int control_value,
                                      int target) {
  detail::check_qubit(state, control, "apply_controlled_x");
  detail::check_qubit(state, target, "apply_controlled_x");
  if (control == target)
    throw std::invalid_argument("apply_controlled_x: control equals target");
  if (control_value != 0 && control_value != 1)
    throw std::invalid_argument("apply_controlled_x: control value must be 0 or 1");
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const std::size_t j = i ^ tmask;
    if (i < j && static_cast<int>((i >> control) & 1) == control_value)
      std::swap(state.amps[i], state.amps[j]);
  }
  return state;
}

// (I - 2|axis><axis|) state, computed as state - 2<axis|state> axis.
// Linear in `state`; only the axis must be normalized.
inline Statevector reflect_about_state(Statevector state, const Statevector& axis) {
  if (state.dimension() != axis.dimension())
    throw std::invalid_argument("reflect_about_state: dimension mismatch");
  const double axis_norm = norm_l2(axis);
  if (std::abs(axis_norm - 1.0) > 1e-8)
    throw std::invalid_argument("reflect_about_state: axis is not normalized");
  Complex overlap{0.0, 0.0};
  for (std::size_t i = 0; i < state.dimension(); ++i)
    overlap += std::conj(axis.amps[i]) * state.amps[i];
  const Complex two_overlap = 2.0 * overlap;
  for (std::size_t i = 0; i < state.dimension(); ++i)
    state.amps[i] -= two_overlap * axis.amps[i];
  return state;
}

// Negates the amplitude of every basis state whose flag bit equals good_value.
inline Statevector flip_sign_on_flag(Statevector state, int flag, int good_value) {
  detail::check_qubit(state, flag, "flip_sign_on_flag");
  if (good_value != 0 && good_value != 1)
    throw std::invalid_argument("flip_sign_on_flag: good value must be 0 or 1");
  for (std::size_t i = 0; i < state.dimension(); ++i)
    if (static_cast<int>((i >> flag) & 1) == good_value) state.amps[i] = -state.amps[i];
  return state;
}

inline Complex inner_product(const Statevector& a, const Statevector& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("inner_product: dimension mismatch");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
  return s;
}

// ---------------------------------------------------------------------------
// Named registers

struct QubitRange {
  int start = 0;
  int width = 0;
};

// Named, contiguous, pairwise-disjoint qubit ranges inside a fixed-size
// register file. Lookup of an unknown name is an error.
class RegisterMap {
 public:
  explicit RegisterMap(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits)
      throw std::invalid_argument("RegisterMap: qubit count out of range");
  }

  void add(const std::string& name, int start, int width) {
    if (width < 1 || start < 0 || start + width > num_qubits_)
      throw std::invalid_argument("RegisterMap: range out of bounds");
    for (const auto& [other, r] : ranges_) {
      const bool disjoint = start + width <= r.start || r.start + r.width <= start;
      if (!disjoint)
        throw std::invalid_argument("RegisterMap: range overlaps register '" + other + "'");
    }
    if (!ranges_.emplace(name, QubitRange{start, width}).second)
      throw std::invalid_argument("RegisterMap: duplicate register '" + name + "'");
  }

  const QubitRange& range(const std::string& name) const {
    auto it = ranges_.find(name);
    if (it == ranges_.end())
      throw std::invalid_argument("RegisterMap: unknown register '" + name + "'");
    return it->second;
  }

  bool contains(const std::string& name) const { return ranges_.count(name) != 0; }
  int num_qubits() const { return num_qubits_; }

 private:
  int num_qubits_;
  std::map<std::string, QubitRange> ranges_;
};

namespace detail {

inline void check_range(const Statevector& state, QubitRange reg, const char* what) {
  if (reg.width < 1 || reg.start < 0 || reg.start + reg.width > state.num_qubits)
    throw std::invalid_argument(std::string(what) + ": register out of bounds");
}

// exp(sign * 2*pi*i * j / n) for j in [0, n/2); one table per transform.
inline std::vector<Complex> fourier_twiddles(std::size_t n, int sign) {
  std::vector<Complex> tw(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double ang = sign * 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
    tw[j] = Complex{std::cos(ang), std::sin(ang)};
  }
  return tw;
}

// In-place radix-2 transform: a[y] <- sum_t a[t] * exp(sign*2*pi*i*t*y/n),
// unscaled. Twiddles must come from fourier_twiddles(n, sign).
inline void fourier_in_place(std::vector<Complex>& a, const std::vector<Complex>& twiddle) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex w = twiddle[k * step];
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Applies the size-2^width unitary DFT with the given kernel sign to the
// register's index space, once per assignment of the remaining qubits.
inline void fourier_on_register(Statevector& state, QubitRange reg, int sign) {
  const std::size_t dim = state.dimension();
  const std::size_t h_dim = std::size_t{1} << reg.width;
  const std::size_t reg_mask = (h_dim - 1) << reg.start;
  const double scale = 1.0 / std::sqrt(static_cast<double>(h_dim));
  const std::vector<Complex> twiddle = fourier_twiddles(h_dim, sign);
  std::vector<Complex> buf(h_dim);
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & reg_mask) continue;
    for (std::size_t r = 0; r < h_dim; ++r) buf[r] = state.amps[base | (r << reg.start)];
    fourier_in_place(buf, twiddle);
    for (std::size_t r = 0; r < h_dim; ++r) state.amps[base | (r << reg.start)] = buf[r] * scale;
  }
}

}  // namespace detail

// |t> -> 2^{-h/2} sum_y exp(+2*pi*i*t*y/2^h) |y> on the register.
inline Statevector qft(Statevector state, QubitRange reg) {
  detail::check_range(state, reg, "qft");
  detail::fourier_on_register(state, reg, +1);
  return state;
}

// Exact inverse transform (kernel sign -1); undoes qft on the same register.
inline Statevector inverse_qft(Statevector state, QubitRange reg) {
  detail::check_range(state, reg, "inverse_qft");
  detail::fourier_on_register(state, reg, -1);
  return state;
}

inline Statevector qft(Statevector state, const RegisterMap& map, const std::string& name) {
  return qft(std::move(state), map.range(name));
}

inline Statevector inverse_qft(Statevector state, const RegisterMap& map,
                               const std::string& name) {
  return inverse_qft(std::move(state), map.range(name));
}

// Exact marginal distribution of the register's basis values: probability of
// value r is the sum of |amplitude|^2 over all other qubits.
inline std::vector<double> measurement_distribution(const Statevector& state, QubitRange reg) {
  detail::check_range(state, reg, "measurement_distribution");
  const std::size_t h_dim = std::size_t{1} << reg.width;
  const std::size_t mask = h_dim - 1;
  std::vector<double> probs(h_dim, 0.0);
  for (std::size_t i = 0; i < state.dimension(); ++i)
    probs[(i >> reg.start) & mask] += std::norm(state.amps[i]);
  return probs;
}

inline std::vector<double> measurement_distribution(const Statevector& state,
                                                    const RegisterMap& map,
                                                    const std::string& name) {
  return measurement_distribution(state, map.range(name));
}

// One measurement outcome, deterministic in the seed. The draw uses the raw
// 53-bit output of mt19937_64 so results do not depend on library
// distribution internals.
inline std::size_t sample_outcome(const std::vector<double>& distribution, std::uint64_t seed) {
  if (distribution.empty())
    throw std::invalid_argument("malformed distribution: empty");
  double total = 0.0;
  for (double p : distribution) {
    if (!(p >= -1e-12) || !std::isfinite(p))
      throw std::invalid_argument("malformed distribution: negative or non-finite entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("malformed distribution: probabilities do not sum to 1");
  std::mt19937_64 gen(seed);
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < distribution.size(); ++i) {
    if (distribution[i] > 0.0) last_positive = i;
    acc += distribution[i];
    if (u < acc && distribution[i] > 0.0) return i;
  }
  return last_positive;
}

}  // namespace aeqsvm
