#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace aeqsvm {

// smallest w with 2^w >= v, exact integer arithmetic
inline int ceil_log2_int(std::uint64_t v) {
  if (v == 0) throw std::invalid_argument("ceil_log2_int: zero argument");
  int w = 0;
  while ((std::uint64_t{1} << w) < v) ++w;
  return w;
}

// ceil(log2(x)) for positive reals. Values within 1e-12 of an integer are
// snapped first so exact powers of two do not round up from fp noise.
inline int ceil_log2_real(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("ceil_log2_real: argument must be positive");
  double lg = std::log2(x);
  const double nearest = std::round(lg);
  if (std::abs(lg - nearest) < 1e-12) lg = nearest;
  return static_cast<int>(std::ceil(lg));
}

}  // namespace aeqsvm
