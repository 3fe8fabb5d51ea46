// Resource and complexity accounting for the amplitude-estimation classifier
// versus the iterated swap-test classifier. Everything here is a pure
// formula evaluation or a seeded Monte-Carlo baseline; table values are
// reports annotated with the formula they came from, not asserted claims.
//
// Term conventions, fixed once for the whole module:
//   * all logarithms are base 2 (the counts are qubits);
//   * k, the eigenvalue precision, is read as ceil(log2(1/epsilon));
//   * per-run training width  Q(m, eps) = 3 + ceil(log2(m+1)) + k
//                                        + ceil(log2(2 + 1/(2 eps))) + 1;
//   * counting width          h(eps)    = ceil(log2((pi + sqrt(3) pi)/eps));
//   * evolution-time policy   t0 = kappa/epsilon (substituted into the
//     complexity surrogates below).
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aeqsvm/numeric.hpp"
#include "aeqsvm/random.hpp"

namespace aeqsvm {

struct ResourceQuery {
  int m = 1;
  int n = 1;
  double kappa = 1.0;
  double epsilon = 0.1;
  std::optional<double> p;          // swap-test success probability
  std::optional<int> t_iterations;  // swap-test repetition count
};

inline void validate(const ResourceQuery& q) {
  if (q.m < 1 || q.n < 1) throw std::invalid_argument("resource query: m, n must be >= 1");
  if (q.kappa < 1.0) throw std::invalid_argument("resource query: kappa must be >= 1");
  if (!(q.epsilon > 0.0 && q.epsilon < 1.0))
    throw std::invalid_argument("resource query: epsilon must be in (0, 1)");
  if (q.p && !(*q.p > 0.0 && *q.p < 1.0))
    throw std::invalid_argument("resource query: p must be in (0, 1)");
  if (q.t_iterations && *q.t_iterations < 1)
    throw std::invalid_argument("resource query: iterations must be >= 1");
}

inline int precision_bits(double epsilon) { return ceil_log2_real(1.0 / epsilon); }

inline int counting_bits(double epsilon) {
  return ceil_log2_real(kPi * (1.0 + std::sqrt(3.0)) / epsilon);
}

// Q(m, eps): width of one training run.
inline int per_run_qubits(int m, double epsilon) {
  if (m < 1) throw std::invalid_argument("per_run_qubits: m must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("per_run_qubits: epsilon must be in (0, 1)");
  return 3 + ceil_log2_int(static_cast<std::uint64_t>(m) + 1) + precision_bits(epsilon) +
         ceil_log2_real(2.0 + 1.0 / (2.0 * epsilon)) + 1;
}

// Train once, estimate once: Q(m, eps) + h(eps).
inline int aeqsvm_qubits(int m, double epsilon) {
  return per_run_qubits(m, epsilon) + counting_bits(epsilon);
}

// T destructive swap-test repetitions, each consuming a fresh run.
inline long long lsqsvm_qubits(int m, double epsilon, int t_iterations) {
  if (t_iterations < 1) throw std::invalid_argument("lsqsvm_qubits: iterations must be >= 1");
  return static_cast<long long>(t_iterations) * per_run_qubits(m, epsilon);
}

// ceil(p (1-p) / eps^2), with values within 1e-9 of an integer snapped so
// the exact symmetry and quadratic-scaling identities survive fp rounding.
inline long long swap_iterations(double p, double epsilon) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("swap_iterations: p must be in (0, 1)");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("swap_iterations: epsilon must be in (0, 1)");
  const double x = p * (1.0 - p) / (epsilon * epsilon);
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x)))
    return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(x));
}

// kappa^3 eps^-3 (log2(mn) + 1)
inline double aeqsvm_complexity(int m, int n, double kappa, double epsilon) {
  if (m < 1 || n < 1) throw std::invalid_argument("aeqsvm_complexity: m, n must be >= 1");
  const double inv_eps = 1.0 / epsilon;
  return kappa * kappa * kappa * inv_eps * inv_eps * inv_eps *
         (std::log2(static_cast<double>(m) * static_cast<double>(n)) + 1.0);
}

// (kappa^3 eps^-3 log2(mn) + log2 n) / (12 eps^2); the 1/12 is the expected
// value of P^2(1-P) over P uniform on (0, 1).
inline double lsqsvm_complexity(int m, int n, double kappa, double epsilon) {
  if (m < 1 || n < 1) throw std::invalid_argument("lsqsvm_complexity: m, n must be >= 1");
  const double inv_eps = 1.0 / epsilon;
  const double core = kappa * kappa * kappa * inv_eps * inv_eps * inv_eps *
                          std::log2(static_cast<double>(m) * static_cast<double>(n)) +
                      std::log2(static_cast<double>(n));
  return core / (12.0 * epsilon * epsilon);
}

// ---------------------------------------------------------------------------
// Swap-test Monte-Carlo baseline

struct SwapTestReport {
  double p = 0.0;
  double epsilon = 0.0;
  long long predicted_iterations = 0;  // swap_iterations(p, epsilon)
  int trials = 0;
  // fraction of trials whose empirical mean lands within epsilon of p when
  // using exactly predicted_iterations samples
  double hit_fraction = 0.0;
  // iterations-vs-epsilon curve at this p (descending epsilon)
  std::vector<std::pair<double, long long>> curve;
};

inline std::vector<double> default_error_grid() {
  return {0.30, 0.25, 0.20, 0.15, 0.10, 0.075, 0.05, 0.04, 0.03, 0.025, 0.02, 0.015, 0.01};
}

// Repeated Bernoulli(p) measurement of the swap-test ancilla: for each trial
// draw N = swap_iterations(p, eps) samples and check whether the empirical
// mean is within eps of p. Deterministic in the seed.
inline SwapTestReport swap_test_baseline(double p, double epsilon, int trials,
                                         std::uint64_t seed,
                                         std::vector<double> error_grid = default_error_grid()) {
  if (trials < 1) throw std::invalid_argument("swap_test_baseline: trials must be >= 1");
  SwapTestReport report;
  report.p = p;
  report.epsilon = epsilon;
  report.predicted_iterations = swap_iterations(p, epsilon);
  report.trials = trials;

  Rng rng(seed);
  const long long n = report.predicted_iterations;
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    long long count = 0;
    for (long long i = 0; i < n; ++i) count += rng.bernoulli(p) ? 1 : 0;
    const double p_hat = static_cast<double>(count) / static_cast<double>(n);
    if (std::abs(p_hat - p) <= epsilon) ++hits;
  }
  report.hit_fraction = static_cast<double>(hits) / static_cast<double>(trials);

  std::sort(error_grid.begin(), error_grid.end(), std::greater<double>());
  report.curve.reserve(error_grid.size());
  for (double eps : error_grid) report.curve.emplace_back(eps, swap_iterations(p, eps));
  return report;
}

// ---------------------------------------------------------------------------
// Comparison tables

struct DatasetSpec {
  std::string name;
  int m = 1;
  int n = 1;
  double kappa = 1.0;
};

struct TableCell {
  double value = 0.0;
  std::string formula;  // the expression the value was computed from
};

struct ComparisonRow {
  std::string dataset;
  std::string algorithm;  // "aeqsvm" or "lsqsvm"
  std::vector<TableCell> cells;  // one per accuracy
};

struct ComparisonTable {
  std::string metric;  // "qubits" or "complexity"
  std::vector<double> accuracies;  // epsilon = 1 - accuracy
  std::vector<ComparisonRow> rows;
};

struct ComparisonTables {
  ComparisonTable qubits;
  ComparisonTable complexity;
};

inline constexpr const char* kQubitFormulaAe =
    "3+ceil(log2(m+1))+ceil(log2(1/eps))+ceil(log2(2+1/(2eps)))+1+ceil(log2((pi+sqrt(3)pi)/eps))";
inline constexpr const char* kQubitFormulaLs =
    "T*(3+ceil(log2(m+1))+ceil(log2(1/eps))+ceil(log2(2+1/(2eps)))+1), "
    "T=round(mean_{P in {0.1,0.3,0.5}} ceil(P(1-P)/eps^2))";
inline constexpr const char* kComplexityFormulaAe = "kappa^3*eps^-3*(log2(mn)+1)";
inline constexpr const char* kComplexityFormulaLs =
    "(kappa^3*eps^-3*log2(mn)+log2(n))/(12*eps^2)";

// Average swap-test repetition count over the three reference success
// probabilities, the reading used for the iterated-classifier qubit rows.
inline long long average_swap_iterations(double epsilon) {
  const double ps[] = {0.1, 0.3, 0.5};
  double total = 0.0;
  for (double p : ps) total += static_cast<double>(swap_iterations(p, epsilon));
  return static_cast<long long>(std::llround(total / 3.0));
}

// Both tables over datasets x accuracies. Accuracy acc maps to error
// eps = 1 - acc; every cell records the formula it was evaluated from.
inline ComparisonTables emit_comparison_table(const std::vector<DatasetSpec>& datasets,
                                              const std::vector<double>& accuracies) {
  if (datasets.empty() || accuracies.empty())
    throw std::invalid_argument("emit_comparison_table: empty inputs");
  for (double acc : accuracies)
    if (!(acc > 0.0 && acc < 1.0))
      throw std::invalid_argument("emit_comparison_table: accuracy must be in (0, 1)");

  ComparisonTables tables;
  tables.qubits.metric = "qubits";
  tables.complexity.metric = "complexity";
  tables.qubits.accuracies = accuracies;
  tables.complexity.accuracies = accuracies;

  for (const DatasetSpec& ds : datasets) {
    ComparisonRow q_ae{ds.name, "aeqsvm", {}}, q_ls{ds.name, "lsqsvm", {}};
    ComparisonRow c_ae{ds.name, "aeqsvm", {}}, c_ls{ds.name, "lsqsvm", {}};
    for (double acc : accuracies) {
      const double eps = 1.0 - acc;
      q_ae.cells.push_back(
          {static_cast<double>(aeqsvm_qubits(ds.m, eps)), kQubitFormulaAe});
      const long long t = average_swap_iterations(eps);
      q_ls.cells.push_back(
          {static_cast<double>(lsqsvm_qubits(ds.m, eps, static_cast<int>(t))),
           kQubitFormulaLs});
      c_ae.cells.push_back({aeqsvm_complexity(ds.m, ds.n, ds.kappa, eps), kComplexityFormulaAe});
      c_ls.cells.push_back({lsqsvm_complexity(ds.m, ds.n, ds.kappa, eps), kComplexityFormulaLs});
    }
    tables.qubits.rows.push_back(std::move(q_ae));
    tables.qubits.rows.push_back(std::move(q_ls));
    tables.complexity.rows.push_back(std::move(c_ae));
    tables.complexity.rows.push_back(std::move(c_ls));
  }
  return tables;
}

}  // namespace aeqsvm
