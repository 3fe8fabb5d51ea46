// Seeded random sources for test problems and Monte-Carlo baselines. All
// draws are derived from raw mt19937_64 output so a seed fixes the exact
// bit stream; nothing here depends on library distribution internals.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "aeqsvm/statevector.hpp"

namespace aeqsvm {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Marsaglia polar
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  bool bernoulli(double p) { return uniform() < p; }

  // uniform integer in [0, bound); bound must be small relative to 2^64
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline Complex random_complex_normal(Rng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return Complex{re, im};
}

inline Statevector random_state(int num_qubits, Rng& rng) {
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  for (Complex& a : amps) a = random_complex_normal(rng);
  return prepare_state(std::move(amps));
}

// Haar-like random unitary: complex Gaussian matrix orthonormalized by
// modified Gram-Schmidt with one re-orthogonalization pass. Row-major.
inline std::vector<Complex> random_unitary(std::size_t dim, Rng& rng) {
  std::vector<Complex> m(dim * dim);
  for (Complex& a : m) a = random_complex_normal(rng);
  auto col = [&](std::size_t c, std::size_t r) -> Complex& { return m[r * dim + c]; };
  for (std::size_t c = 0; c < dim; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex proj{0.0, 0.0};
        for (std::size_t r = 0; r < dim; ++r) proj += std::conj(col(prev, r)) * col(c, r);
        for (std::size_t r = 0; r < dim; ++r) col(c, r) -= proj * col(prev, r);
      }
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) nrm += std::norm(col(c, r));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < dim; ++r) col(c, r) /= nrm;
  }
  return m;
}

}  // namespace aeqsvm
