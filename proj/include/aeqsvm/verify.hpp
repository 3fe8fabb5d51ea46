// Self-contained verification suites over randomized problem families:
// the rotation identities and eigenstructure of the amplification operator,
// the closed-form good-state mass after repeated amplification, the spectral
// fixture with a singular training matrix, solver parity between the direct
// and pseudoinverse paths, the oracle-state inner-product identities, and
// end-to-end label parity against the classical classifier. The CLI's
// `verify` command is a thin wrapper over this header.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "aeqsvm/gqae.hpp"
#include "aeqsvm/qclassify.hpp"
#include "aeqsvm/qtrain.hpp"
#include "aeqsvm/random.hpp"
#include "aeqsvm/svm.hpp"

namespace aeqsvm {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string details;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

enum class VerifyScope { kGqae, kTrain, kClassify, kAll };

struct VerifyOptions {
  std::uint64_t seed = 0;
  // Negative-control hook: corrupts the sign of the amplification operator
  // inside the rotation-identity check, which must then fail.
  bool corrupt_q_sign = false;
};

// ---------------------------------------------------------------------------
// Randomized problem generators (also used by the test suites)

inline std::vector<int> iota_qubits(int count) {
  std::vector<int> qs(count);
  std::iota(qs.begin(), qs.end(), 0);
  return qs;
}

// Random problem: Haar-like unitary A on `work` qubits, random initial state,
// random flag qubit. Retries until the good-state probability lands in
// (a_min, a_max).
inline GroverOperator make_random_gqae_problem(Rng& rng, int min_work, int max_work,
                                               double a_min = -1.0, double a_max = 2.0) {
  for (;;) {
    const int w = min_work + static_cast<int>(rng.below(max_work - min_work + 1));
    const std::size_t dim = std::size_t{1} << w;
    GroverOperator op{LinearOperator::dense(random_unitary(dim, rng), iota_qubits(w)),
                      random_state(w, rng),
                      GoodStatePredicate{static_cast<int>(rng.below(w)), 1}};
    const double a = split_good_bad(op.a_op.apply(op.initial_state), op.predicate).a;
    if (a > a_min && a < a_max) return op;
  }
}

// Single-qubit rotation problem with an exactly chosen good-state
// probability: A = Ry(2 theta) on |0>, flag = the qubit itself.
inline GroverOperator make_rotation_problem(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const std::vector<Complex> ry{Complex{c, 0.0}, Complex{-s, 0.0},
                                Complex{s, 0.0}, Complex{c, 0.0}};
  return GroverOperator{LinearOperator::dense(ry, {0}), zero_state(1), GoodStatePredicate{0, 1}};
}

// Linearly separable dataset: labels follow the sign of a random hyperplane,
// points are kept only when their relative margin is at least `margin`.
inline TrainingSet make_separable_dataset(Rng& rng, int m, int n, double margin = 0.35) {
  for (;;) {
    std::vector<double> w(n);
    double w_norm = 0.0;
    for (double& wi : w) {
      wi = rng.normal();
      w_norm += wi * wi;
    }
    w_norm = std::sqrt(w_norm);
    if (w_norm < 1e-6) continue;
    for (double& wi : w) wi /= w_norm;

    TrainingSet ts;
    while (ts.size() < m) {
      std::vector<double> x(n);
      double dot = 0.0, x_norm = 0.0;
      for (int j = 0; j < n; ++j) {
        x[j] = rng.uniform(-1.0, 1.0);
        dot += w[j] * x[j];
        x_norm += x[j] * x[j];
      }
      x_norm = std::sqrt(x_norm);
      if (x_norm < 0.1 || std::abs(dot) < margin * x_norm) continue;
      ts.labels.push_back(dot > 0 ? 1 : -1);
      ts.vectors.push_back(std::move(x));
    }
    const bool has_pos = std::find(ts.labels.begin(), ts.labels.end(), 1) != ts.labels.end();
    const bool has_neg = std::find(ts.labels.begin(), ts.labels.end(), -1) != ts.labels.end();
    if (has_pos && has_neg) return ts;
  }
}

// Fixed singular 3x3 fixture with spectrum {9, 4, 0}; the zero eigenvalue
// exercises the filtered inversion path.
inline Eigen::MatrixXd singular_fixture() {
  Eigen::MatrixXd f(3, 3);
  f << 5, -1, 3, -1, 5, -3, 3, -3, 3;
  return f;
}

// ---------------------------------------------------------------------------
// Individual checks

// Q acts on the unnormalized good/bad components as a rotation:
//   Q good = (1-2a) good - 2a bad
//   Q bad  = 2(1-a) good + (1-2a) bad
inline CheckResult check_rotation_identities(std::uint64_t seed, int problems,
                                             bool corrupt_sign = false) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < problems; ++i) {
    const GroverOperator op = make_random_gqae_problem(rng, 1, 4);
    const Statevector psi = op.a_op.apply(op.initial_state);
    const GoodBadSplit split = split_good_bad(psi, op.predicate);
    Statevector q_good = apply_q(op, split.good);
    Statevector q_bad = apply_q(op, split.bad);
    if (corrupt_sign) {
      for (Complex& a : q_good.amps) a = -a;
      for (Complex& a : q_bad.amps) a = -a;
    }
    const double a = split.a;
    double r_good = 0.0, r_bad = 0.0;
    for (std::size_t j = 0; j < psi.dimension(); ++j) {
      r_good += std::norm(q_good.amps[j] -
                          ((1.0 - 2.0 * a) * split.good.amps[j] - 2.0 * a * split.bad.amps[j]));
      r_bad += std::norm(q_bad.amps[j] - (2.0 * (1.0 - a) * split.good.amps[j] +
                                          (1.0 - 2.0 * a) * split.bad.amps[j]));
    }
    worst = std::max(worst, std::sqrt(std::max(r_good, r_bad)));
  }
  CheckResult result{"grover_rotation_identities", worst <= 1e-10, worst, 1e-10,
                     std::to_string(problems) + " random problems, <=4 work qubits"};
  return result;
}

// Q has eigenvalues exp(+-2i theta) on span{good, bad}, and |Psi> decomposes
// over the two eigenvectors with coefficients -i e^{+-i theta}/sqrt(2).
inline CheckResult check_eigenpair_relations(std::uint64_t seed, int problems) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < problems; ++i) {
    const GroverOperator op = make_random_gqae_problem(rng, 1, 4, 0.05, 0.95);
    const EigenpairReport report = eigenpair_check(op);
    worst = std::max({worst, report.max_residual, report.decomposition_residual});
  }
  return CheckResult{"grover_eigenpair_relations", worst <= 1e-10, worst, 1e-10,
                     std::to_string(problems) + " random problems, 0.05 < a < 0.95"};
}

// After j amplifications of |Psi>, the good mass is sin^2((2j+1) theta).
inline CheckResult check_power_mass(std::uint64_t seed, int problems, int max_power = 8) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < problems; ++i) {
    const GroverOperator op = make_random_gqae_problem(rng, 1, 4, 1e-6, 1.0 - 1e-6);
    Statevector state = op.a_op.apply(op.initial_state);
    const double a = split_good_bad(state, op.predicate).a;
    const double theta = std::asin(std::min(1.0, std::sqrt(a)));
    for (int j = 0; j <= max_power; ++j) {
      const double mass = split_good_bad(state, op.predicate).a;
      const double expected = std::pow(std::sin((2.0 * j + 1.0) * theta), 2);
      worst = std::max(worst, std::abs(mass - expected));
      if (j < max_power) state = apply_q(op, std::move(state));
    }
  }
  return CheckResult{"grover_power_good_mass", worst <= 1e-9, worst, 1e-9,
                     std::to_string(problems) + " problems, powers 0..8"};
}

inline CheckResult check_singular_fixture_spectrum() {
  const SpectralDecomposition decomp = eigendecompose(singular_fixture());
  const double expected[3] = {9.0, 4.0, 0.0};
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(decomp.eigenvalues(i) - expected[i]));
  // reconstruction residual, same tolerance scale
  Eigen::MatrixXd rebuilt = Eigen::MatrixXd::Zero(3, 3);
  for (int i = 0; i < 3; ++i)
    rebuilt += decomp.eigenvalues(i) * decomp.eigenvectors.col(i) *
               decomp.eigenvectors.col(i).transpose();
  worst = std::max(worst, (rebuilt - singular_fixture()).norm());
  return CheckResult{"singular_fixture_spectrum", worst <= 1e-9, worst, 1e-9,
                     "fixed 3x3 fixture, spectrum {9, 4, 0}"};
}

// Filtered spectral inversion against an independently computed
// Moore-Penrose pseudoinverse (complete orthogonal decomposition).
inline CheckResult check_singular_fixture_pseudoinverse() {
  const Eigen::MatrixXd f = singular_fixture();
  const SpectralDecomposition decomp = eigendecompose(f);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(f);
  cod.setThreshold(1e-10);
  const Eigen::MatrixXd pinv = cod.pseudoInverse();

  double worst = 0.0;
  std::vector<Eigen::Vector3d> targets{{1.0, 1.0, 0.0}, {0.0, 1.0, -1.0}, {2.0, -1.0, 0.5}};
  for (const Eigen::Vector3d& t : targets) {
    const PseudoinverseSolution sol =
        pseudoinverse_solve(decomp, t, PrecisionParams{52, 1e12, 0.01});
    Eigen::VectorXd x(3);
    x(0) = sol.model.b;
    x(1) = sol.model.alpha[0];
    x(2) = sol.model.alpha[1];
    worst = std::max(worst, (x - pinv * t).norm());
  }
  return CheckResult{"singular_fixture_pseudoinverse", worst <= 1e-9, worst, 1e-9,
                     "three targets vs complete-orthogonal-decomposition pseudoinverse"};
}

// Direct solve and full-precision pseudoinverse solve agree on random
// nonsingular systems.
inline CheckResult check_solver_parity(std::uint64_t seed, int systems) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < systems; ++i) {
    const int m = 2 + static_cast<int>(rng.below(6));
    const int n = 1 + static_cast<int>(rng.below(4));
    TrainingSet ts;
    for (int k = 0; k < m; ++k) {
      std::vector<double> x(n);
      for (double& v : x) v = rng.uniform(-2.0, 2.0);
      ts.vectors.push_back(std::move(x));
      ts.labels.push_back(rng.bernoulli(0.5) ? 1 : -1);
    }
    if (std::find(ts.labels.begin(), ts.labels.end(), 1) == ts.labels.end()) ts.labels[0] = 1;
    if (std::find(ts.labels.begin(), ts.labels.end(), -1) == ts.labels.end()) ts.labels[0] = -1;
    const SvmSystem sys = build_system(build_kernel(ts), ts.labels, rng.uniform(0.5, 4.0));

    SvmModel direct;
    try {
      direct = solve_exact(sys, ts.labels);
    } catch (const NumericalError&) {
      continue;  // singular draw; parity is defined on nonsingular systems
    }
    const PseudoinverseSolution spectral = pseudoinverse_solve(
        eigendecompose(sys.f_matrix), system_rhs(ts.labels), PrecisionParams{52, 1e12, 0.01});
    double diff = std::pow(direct.b - spectral.model.b, 2);
    for (int k = 0; k < m; ++k)
      diff += std::pow(direct.alpha[k] - spectral.model.alpha[k], 2);
    worst = std::max(worst, std::sqrt(diff) / std::sqrt(direct.c_norm));
  }
  return CheckResult{"train_solver_parity", worst <= 1e-8, worst, 1e-8,
                     std::to_string(systems) + " random nonsingular systems"};
}

namespace detail {

inline SvmModel random_model(Rng& rng, int m) {
  SvmModel model;
  model.b = rng.uniform(-1.0, 1.0);
  model.c_norm = model.b * model.b;
  for (int k = 0; k < m; ++k) {
    model.alpha.push_back(rng.uniform(-1.0, 1.0));
    model.c_norm += model.alpha.back() * model.alpha.back();
  }
  return model;
}

inline TrainingSet random_training_set(Rng& rng, int m, int n) {
  TrainingSet ts;
  for (int k = 0; k < m; ++k) {
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(-1.5, 1.5);
    ts.vectors.push_back(std::move(x));
    ts.labels.push_back(rng.bernoulli(0.5) ? 1 : -1);
  }
  return ts;
}

}  // namespace detail

// Good-state mass after A1 equals (1 - <mu|x~>)/2, and the state-level inner
// product matches its closed form.
inline CheckResult check_good_mass_identity(std::uint64_t seed, int pairs) {
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const int m = 1 + static_cast<int>(rng.below(7));
    const int n = 1 + static_cast<int>(rng.below(4));
    const TrainingSet ts = detail::random_training_set(rng, m, n);
    const SvmModel model = detail::random_model(rng, m);
    std::vector<double> query(n);
    double q_norm = 0.0;
    for (double& v : query) {
      v = rng.uniform(-1.0, 1.0);
      q_norm += v * v;
    }
    if (q_norm < 1e-4) {
      --i;
      continue;
    }

    OracleStates oracles;
    try {
      oracles = build_oracle_states(model, ts, query);
    } catch (const NumericalError&) {
      --i;
      continue;  // degenerate zero-normalization draw
    }
    const ClassifierCircuit circuit = build_phi0(oracles.mu_tilde.state, oracles.x_tilde.state);
    const double mass = split_good_bad(apply_a1(circuit), circuit.predicate).a;
    const double inner = inner_product(oracles.mu_tilde.state, oracles.x_tilde.state).real();
    worst = std::max(worst, std::abs(mass - 0.5 * (1.0 - inner)));
    worst = std::max(worst, std::abs(inner - oracle_inner_closed_form(model, ts, query)));
  }
  return CheckResult{"good_mass_inner_identity", worst <= 1e-12, worst, 1e-12,
                     std::to_string(pairs) + " random model/query pairs, m <= 7"};
}

// Modal-mode quantum labels match the classical classifier on queries whose
// normalized margin clears the counting-register resolution.
inline CheckResult check_label_parity(std::uint64_t seed, int datasets, int h = 10) {
  Rng rng(seed);
  int compared = 0, agreed = 0;
  const double resolution = std::ldexp(1.0, 2 - h);
  for (int d = 0; d < datasets; ++d) {
    const int m = 2 + static_cast<int>(rng.below(4));
    const int n = 2;
    const TrainingSet ts = make_separable_dataset(rng, m, n);
    SvmModel model;
    try {
      model = solve_exact(build_system(build_kernel(ts), ts.labels, 1.0), ts.labels);
    } catch (const NumericalError&) {
      continue;
    }
    for (int q = 0; q < 4; ++q) {
      std::vector<double> query(n);
      for (double& v : query) v = rng.uniform(-1.0, 1.0);
      const double inner = oracle_inner_closed_form(model, ts, query);
      if (std::abs(inner) < resolution) continue;
      const ClassificationResult quantum =
          classify_quantum(model, ts, query, h, EstimationMode::kModal);
      const Classification classical = classify_classical(model, ts, query);
      ++compared;
      if (quantum.label == classical.label) ++agreed;
    }
  }
  const double disagreement =
      compared == 0 ? 1.0 : static_cast<double>(compared - agreed) / compared;
  return CheckResult{"label_parity", compared > 0 && agreed == compared, disagreement, 0.0,
                     std::to_string(agreed) + "/" + std::to_string(compared) +
                         " retained queries agree with the classical labels"};
}

// ---------------------------------------------------------------------------
// Suites

inline VerifyReport verify_gqae(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_rotation_identities(options.seed, 100, options.corrupt_q_sign));
  report.checks.push_back(check_eigenpair_relations(options.seed + 1, 100));
  report.checks.push_back(check_power_mass(options.seed + 2, 20));
  return report;
}

inline VerifyReport verify_train(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_singular_fixture_spectrum());
  report.checks.push_back(check_singular_fixture_pseudoinverse());
  report.checks.push_back(check_solver_parity(options.seed + 3, 50));
  return report;
}

inline VerifyReport verify_classify(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_good_mass_identity(options.seed + 4, 50));
  report.checks.push_back(check_label_parity(options.seed + 5, 10));
  return report;
}

inline VerifyReport run_verify(VerifyScope scope, const VerifyOptions& options) {
  VerifyReport report;
  auto append = [&report](const VerifyReport& part) {
    report.checks.insert(report.checks.end(), part.checks.begin(), part.checks.end());
  };
  if (scope == VerifyScope::kGqae || scope == VerifyScope::kAll) append(verify_gqae(options));
  if (scope == VerifyScope::kTrain || scope == VerifyScope::kAll) append(verify_train(options));
  if (scope == VerifyScope::kClassify || scope == VerifyScope::kAll)
    append(verify_classify(options));
  return report;
}

}  // namespace aeqsvm
