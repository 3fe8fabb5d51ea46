// Matrix-level emulation of quantum-SVD training. The training system F is
// spectrally decomposed, its normalized eigenvalues are rounded to k bits to
// model the finite precision of singular-value estimation, and the solution
// is the filtered spectral inverse: only eigenvalues within the relative
// window [1/kappa_cap, 1] of the largest are inverted (Moore-Penrose with a
// condition-number cap). The unit-norm solution vector is the trained
// amplitude encoding of (b; alpha).
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "aeqsvm/errors.hpp"
#include "aeqsvm/svm.hpp"

namespace aeqsvm {

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // sorted by descending |lambda|
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, same order
  double input_scale = 0.0;      // max |lambda| of the input matrix
};

struct PrecisionParams {
  int k = 52;               // eigenvalues rounded to multiples of 2^-k (normalized)
  double kappa_cap = 1e12;  // invert only |lambda|/max >= 1/kappa_cap
  double epsilon = 0.01;    // target accuracy, used by resource accounting
};

inline void validate(const PrecisionParams& p) {
  if (p.k < 1 || p.k > 52) throw std::invalid_argument("precision bits k must be in [1, 52]");
  if (p.kappa_cap < 1.0) throw std::invalid_argument("kappa_cap must be >= 1");
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0))
    throw std::invalid_argument("epsilon must be in (0, 1)");
}

inline SpectralDecomposition eigendecompose(const Eigen::MatrixXd& f) {
  if (f.rows() != f.cols()) throw std::invalid_argument("eigendecompose: matrix must be square");
  const double scale = std::max(1.0, f.cwiseAbs().maxCoeff());
  if ((f - f.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw std::invalid_argument("eigendecompose: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (f + f.transpose()));
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigendecompose: eigensolver failed");

  const int n = static_cast<int>(f.rows());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const double ai = std::abs(ev(i)), aj = std::abs(ev(j));
    if (ai != aj) return ai > aj;
    return ev(i) > ev(j);
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues(i) = ev(order[i]);
    out.eigenvectors.col(i) = solver.eigenvectors().col(order[i]);
  }
  out.input_scale = n > 0 ? std::abs(out.eigenvalues(0)) : 0.0;
  return out;
}

// Rounds each lambda/input_scale to the nearest multiple of 2^-k and
// rescales. Eigenvectors are untouched; zero stays zero for every k.
inline SpectralDecomposition quantize_eigenvalues(SpectralDecomposition decomp,
                                                  const PrecisionParams& params) {
  validate(params);
  if (!(decomp.input_scale > 0.0))
    throw std::invalid_argument("quantize_eigenvalues: input scale must be positive");
  const double grid = std::ldexp(1.0, params.k);  // 2^k
  for (int i = 0; i < decomp.eigenvalues.size(); ++i) {
    const double normalized = decomp.eigenvalues(i) / decomp.input_scale;
    decomp.eigenvalues(i) = decomp.input_scale * (std::round(normalized * grid) / grid);
  }
  return decomp;
}

inline int count_retained(const SpectralDecomposition& decomp, double kappa_cap) {
  const double max_abs = decomp.eigenvalues.size() > 0
                             ? decomp.eigenvalues.cwiseAbs().maxCoeff()
                             : 0.0;
  if (max_abs <= 0.0) return 0;
  int retained = 0;
  for (int i = 0; i < decomp.eigenvalues.size(); ++i)
    if (std::abs(decomp.eigenvalues(i)) >= max_abs / kappa_cap) ++retained;
  return retained;
}

struct PseudoinverseSolution {
  std::vector<double> amplitudes;  // unit-norm solution direction (b; alpha)/|.|
  SvmModel model;                  // unnormalized b, alpha, and c_norm
  int retained = 0;                // eigenvalues that were inverted
};

inline PseudoinverseSolution pseudoinverse_solve(const SpectralDecomposition& decomp,
                                                 const Eigen::VectorXd& target,
                                                 const PrecisionParams& params) {
  validate(params);
  if (target.size() != decomp.eigenvalues.size())
    throw std::invalid_argument("pseudoinverse_solve: dimension mismatch");
  const double max_abs =
      decomp.eigenvalues.size() > 0 ? decomp.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  if (max_abs <= 0.0) throw NumericalError("numerically zero operator");

  Eigen::VectorXd solution = Eigen::VectorXd::Zero(target.size());
  int retained = 0;
  double projected_sq = 0.0;  // ||P target||^2 over the retained eigenvectors
  for (int i = 0; i < decomp.eigenvalues.size(); ++i) {
    const double lambda = decomp.eigenvalues(i);
    if (std::abs(lambda) < max_abs / params.kappa_cap) continue;
    ++retained;
    const double beta = decomp.eigenvectors.col(i).dot(target);
    projected_sq += beta * beta;
    solution += (beta / lambda) * decomp.eigenvectors.col(i);
  }
  // a target (numerically) orthogonal to every retained eigenvector has no
  // invertible component
  const double floor = 1e-12 * target.norm();
  if (retained == 0 || projected_sq <= floor * floor)
    throw NumericalError("numerically zero operator");

  PseudoinverseSolution out;
  out.retained = retained;
  out.model = model_from_solution(solution);
  out.amplitudes.resize(solution.size());
  const double norm = solution.norm();
  for (int i = 0; i < solution.size(); ++i) out.amplitudes[i] = solution(i) / norm;
  return out;
}

// max|lambda| / min{ |lambda| : |lambda| > threshold * max|lambda| }
inline double condition_number(const SpectralDecomposition& decomp, double threshold) {
  const double max_abs =
      decomp.eigenvalues.size() > 0 ? decomp.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  if (max_abs <= 0.0) throw NumericalError("condition_number: zero matrix");
  double min_abs = -1.0;
  for (int i = 0; i < decomp.eigenvalues.size(); ++i) {
    const double a = std::abs(decomp.eigenvalues(i));
    if (a > threshold * max_abs && (min_abs < 0.0 || a < min_abs)) min_abs = a;
  }
  if (min_abs <= 0.0) throw NumericalError("condition_number: empty retained spectrum");
  return max_abs / min_abs;
}

}  // namespace aeqsvm
