// Classical least-squares SVM with a linear kernel. Training reduces to one
// bordered linear system
//
//     [ 0   1^T          ] [ b     ]   [ 0 ]
//     [ 1   K + I/gamma  ] [ alpha ] = [ y ]
//
// solved exactly; classification is sign(sum_k alpha_k x_k.x + b). This is
// the ground-truth oracle the quantum-side pipeline is checked against.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "aeqsvm/errors.hpp"

namespace aeqsvm {

struct TrainingSet {
  std::vector<std::vector<double>> vectors;  // m rows of n features
  std::vector<int> labels;                   // each exactly -1 or +1

  int size() const { return static_cast<int>(vectors.size()); }
  int dim() const { return vectors.empty() ? 0 : static_cast<int>(vectors.front().size()); }
};

// Shape-only validation (oracle construction is well defined from m = 1).
inline void validate_features(const TrainingSet& ts) {
  if (ts.size() < 1) throw std::invalid_argument("training set: empty");
  const std::size_t n = ts.vectors.front().size();
  if (n < 1) throw std::invalid_argument("training set: empty feature vectors");
  for (const std::vector<double>& row : ts.vectors) {
    if (row.size() != n) throw std::invalid_argument("training set: ragged feature rows");
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("training set: non-finite feature");
  }
}

// Full validation for training: solving needs at least two labeled points.
inline void validate(const TrainingSet& ts) {
  if (ts.size() < 2) throw std::invalid_argument("training set needs at least 2 points");
  if (ts.labels.size() != ts.vectors.size())
    throw std::invalid_argument("training set: label count mismatch");
  validate_features(ts);
  for (int label : ts.labels)
    if (label != 1 && label != -1)
      throw std::invalid_argument("training set: labels must be +1 or -1");
}

// Linear-kernel Gram matrix K[i][j] = x_i . x_j.
inline Eigen::MatrixXd build_kernel(const TrainingSet& ts) {
  validate(ts);
  const int m = ts.size();
  const int n = ts.dim();
  Eigen::MatrixXd x(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = ts.vectors[i][j];
  return x * x.transpose();
}

struct SvmSystem {
  Eigen::MatrixXd f_matrix;  // (m+1) x (m+1) bordered matrix
  double gamma = 1.0;
};

inline SvmSystem build_system(const Eigen::MatrixXd& kernel, const std::vector<int>& labels,
                              double gamma) {
  if (gamma <= 0.0) throw std::invalid_argument("build_system: gamma must be positive");
  if (kernel.rows() != kernel.cols())
    throw std::invalid_argument("build_system: kernel must be square");
  if (static_cast<int>(labels.size()) != kernel.rows())
    throw std::invalid_argument("build_system: label count mismatch");
  const int m = static_cast<int>(kernel.rows());
  SvmSystem sys;
  sys.gamma = gamma;
  sys.f_matrix = Eigen::MatrixXd::Zero(m + 1, m + 1);
  sys.f_matrix.block(1, 0, m, 1).setOnes();
  sys.f_matrix.block(0, 1, 1, m).setOnes();
  sys.f_matrix.block(1, 1, m, m) =
      kernel + (1.0 / gamma) * Eigen::MatrixXd::Identity(m, m);
  return sys;
}

struct SvmModel {
  double b = 0.0;
  std::vector<double> alpha;
  double c_norm = 0.0;  // b^2 + sum alpha_k^2
};

inline Eigen::VectorXd system_rhs(const std::vector<int>& labels) {
  Eigen::VectorXd rhs(labels.size() + 1);
  rhs(0) = 0.0;
  for (std::size_t k = 0; k < labels.size(); ++k) rhs(k + 1) = labels[k];
  return rhs;
}

inline SvmModel model_from_solution(const Eigen::VectorXd& x) {
  SvmModel model;
  model.b = x(0);
  model.alpha.assign(x.data() + 1, x.data() + x.size());
  model.c_norm = x.squaredNorm();
  return model;
}

// Exact direct solve of F (b; alpha) = (0; y). Rejects singular systems;
// those belong to the pseudoinverse path.
inline SvmModel solve_exact(const SvmSystem& sys, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) + 1 != sys.f_matrix.rows())
    throw std::invalid_argument("solve_exact: label count mismatch");
  const Eigen::VectorXd rhs = system_rhs(labels);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sys.f_matrix);
  if (!lu.isInvertible())
    throw NumericalError("solve_exact: singular system, use pseudoinverse_solve");
  const Eigen::VectorXd x = lu.solve(rhs);
  const double residual = (sys.f_matrix * x - rhs).norm();
  if (residual > 1e-8 * rhs.norm())
    throw NumericalError("solve_exact: solver residual out of tolerance");
  return model_from_solution(x);
}

struct Classification {
  int label = 1;
  double margin = 0.0;
  bool boundary = false;  // margin exactly zero; label reported as +1
};

inline Classification classify_classical(const SvmModel& model, const TrainingSet& ts,
                                         const std::vector<double>& query) {
  if (static_cast<int>(model.alpha.size()) != ts.size())
    throw std::invalid_argument("classify_classical: model/training size mismatch");
  if (static_cast<int>(query.size()) != ts.dim())
    throw std::invalid_argument("classify_classical: query dimension mismatch");
  double margin = model.b;
  for (int k = 0; k < ts.size(); ++k) {
    double dot = 0.0;
    for (int j = 0; j < ts.dim(); ++j) dot += ts.vectors[k][j] * query[j];
    margin += model.alpha[k] * dot;
  }
  Classification out;
  out.margin = margin;
  out.boundary = margin == 0.0;
  out.label = margin < 0.0 ? -1 : 1;
  return out;
}

}  // namespace aeqsvm
