#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "aeqsvm/aeqsvm.hpp"

namespace testutil {

inline double state_distance(const aeqsvm::Statevector& a, const aeqsvm::Statevector& b) {
  if (a.dimension() != b.dimension()) return 1e300;
  double s = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::norm(a.amps[i] - b.amps[i]);
  return std::sqrt(s);
}

inline double vector_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return 1e300;
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Composite Simpson rule; exact for cubics up to rounding.
template <typename F>
double simpson(F f, double lo, double hi, int intervals) {
  const int n = intervals % 2 == 0 ? intervals : intervals + 1;
  const double step = (hi - lo) / n;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) acc += f(lo + i * step) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * step / 3.0;
}

}  // namespace testutil
