// aeqsvm command-line tool: train an amplitude-encoded SVM on a CSV dataset,
// classify queries through the amplitude-estimation pipeline with a classical
// cross-check, run the verification suites, and emit resource-accounting
// tables. All reports are JSON (CSV export for tables); outputs are
// byte-identical for a fixed seed.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "aeqsvm/aeqsvm.hpp"

namespace {

using nlohmann::json;
using namespace aeqsvm;

constexpr const char* kSchemaVersion = "1";
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

// quantum classification caps: index register 3 qubits, feature register 4,
// so the 24-qubit budget holds up to h = 12 counting bits
constexpr int kMaxQuantumTrainingPoints = 7;
constexpr int kMaxQuantumFeatures = 16;
constexpr int kMaxDirectSolvePoints = 512;

void write_report(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write output file: " + out_path);
  out << report.dump(2) << '\n';
}

json base_report(const std::string& command) {
  json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["config"] = json::object();
  report["results"] = json::array();
  report["residuals"] = json::object();
  return report;
}

// ---------------------------------------------------------------------------
// train

struct TrainArgs {
  std::string data;
  std::string out = "model.json";
  double gamma = 1.0;
  int k = 52;
  double kappa_cap = 1e12;
  double epsilon = 0.1;
};

int run_train(const TrainArgs& args) {
  const TrainingSet ts = load_dataset_csv(args.data);
  validate(ts);
  if (ts.size() > kMaxDirectSolvePoints)
    throw InputError("training set exceeds the direct-solve cap (m <= 512)");

  const PrecisionParams params{args.k, args.kappa_cap, args.epsilon};
  validate(params);
  const SvmSystem sys = build_system(build_kernel(ts), ts.labels, args.gamma);
  const SpectralDecomposition decomp =
      quantize_eigenvalues(eigendecompose(sys.f_matrix), params);
  const Eigen::VectorXd rhs = system_rhs(ts.labels);
  const PseudoinverseSolution sol = pseudoinverse_solve(decomp, rhs, params);

  // residual of F x = rhs on the retained eigenspace
  Eigen::VectorXd x(rhs.size());
  x(0) = sol.model.b;
  for (int i = 0; i < ts.size(); ++i) x(i + 1) = sol.model.alpha[i];
  const Eigen::VectorXd raw_residual = sys.f_matrix * x - rhs;
  const double max_abs = decomp.eigenvalues.cwiseAbs().maxCoeff();
  Eigen::VectorXd projected = Eigen::VectorXd::Zero(rhs.size());
  double min_retained = max_abs;
  for (int i = 0; i < decomp.eigenvalues.size(); ++i) {
    const double magnitude = std::abs(decomp.eigenvalues(i));
    if (magnitude < max_abs / args.kappa_cap) continue;
    projected += decomp.eigenvectors.col(i).dot(raw_residual) * decomp.eigenvectors.col(i);
    min_retained = std::min(min_retained, magnitude);
  }
  const double residual = projected.norm() / rhs.norm();
  const double kappa = max_abs / min_retained;

  json report = base_report("train");
  report["config"] = {{"data", args.data},
                      {"gamma", args.gamma},
                      {"k", args.k},
                      {"kappa_cap", args.kappa_cap},
                      {"epsilon", args.epsilon}};
  json result;
  result["m"] = ts.size();
  result["n"] = ts.dim();
  result["b"] = sol.model.b;
  result["alpha"] = sol.model.alpha;
  result["c_norm"] = sol.model.c_norm;
  result["amplitudes"] = sol.amplitudes;
  std::vector<double> eigenvalues(decomp.eigenvalues.data(),
                                  decomp.eigenvalues.data() + decomp.eigenvalues.size());
  result["eigenvalues"] = eigenvalues;
  result["input_scale"] = decomp.input_scale;
  result["condition_number"] = kappa;
  result["retained"] = sol.retained;
  result["residual"] = residual;
  result["training"] = {{"vectors", ts.vectors}, {"labels", ts.labels}};
  report["results"].push_back(std::move(result));
  report["residuals"]["solver_residual"] = residual;

  write_report(report, args.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  std::string model;
  std::string query;
  std::string out;
  int h = 10;
  std::string mode = "modal";
  std::uint64_t seed = 0;
};

EstimationMode parse_mode(const std::string& mode) {
  if (mode == "sample") return EstimationMode::kSample;
  if (mode == "modal") return EstimationMode::kModal;
  if (mode == "full-distribution") return EstimationMode::kFullDistribution;
  throw InputError("unknown mode '" + mode + "' (sample | modal | full-distribution)");
}

struct LoadedModel {
  SvmModel model;
  TrainingSet training;
};

LoadedModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("model file " + path + ": " + e.what());
  }
  try {
    const json& result = j.at("results").at(0);
    LoadedModel loaded;
    loaded.model.b = result.at("b").get<double>();
    loaded.model.alpha = result.at("alpha").get<std::vector<double>>();
    loaded.model.c_norm = result.at("c_norm").get<double>();
    loaded.training.vectors =
        result.at("training").at("vectors").get<std::vector<std::vector<double>>>();
    loaded.training.labels = result.at("training").at("labels").get<std::vector<int>>();
    return loaded;
  } catch (const json::exception& e) {
    throw InputError("model file " + path + " is missing fields: " + e.what());
  }
}

int run_classify(const ClassifyArgs& args) {
  const LoadedModel loaded = load_model(args.model);
  const EstimationMode mode = parse_mode(args.mode);

  std::vector<std::vector<double>> queries;
  if (std::filesystem::exists(args.query)) {
    queries = load_query_csv(args.query);
  } else {
    queries.push_back(parse_inline_vector(args.query));
  }

  const int m = loaded.training.size();
  const int n = loaded.training.dim();
  if (m > kMaxQuantumTrainingPoints)
    throw InputError("quantum classification supports at most 7 training points");
  if (n > kMaxQuantumFeatures)
    throw InputError("quantum classification supports at most 16 features");
  for (const std::vector<double>& q : queries)
    if (static_cast<int>(q.size()) != n)
      throw InputError("query dimension " + std::to_string(q.size()) +
                       " does not match model dimension " + std::to_string(n));

  json report = base_report("classify");
  report["config"] = {{"model", args.model},
                      {"h", args.h},
                      {"mode", args.mode},
                      {"seed", args.seed}};
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const ClassificationResult quantum = classify_quantum(
        loaded.model, loaded.training, queries[i], args.h, mode, args.seed + i);
    const Classification classical =
        classify_classical(loaded.model, loaded.training, queries[i]);
    json record;
    record["query"] = queries[i];
    record["y"] = quantum.y;
    record["a_hat"] = quantum.a_hat;
    record["inner_estimate"] = quantum.inner_estimate;
    record["exact_inner"] = quantum.exact_inner;
    record["quantum_label"] = quantum.label;
    record["boundary"] = quantum.boundary;
    record["classical_label"] = classical.label;
    record["margin"] = classical.margin;
    record["agreement"] = quantum.label == classical.label;
    if (!quantum.distribution.empty()) record["distribution"] = quantum.distribution;
    report["results"].push_back(std::move(record));
  }

  write_report(report, args.out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string scope = "all";
  std::string out;
  std::uint64_t seed = 0;
  bool corrupt_q_sign = false;
};

VerifyScope parse_scope(const std::string& scope) {
  if (scope == "gqae") return VerifyScope::kGqae;
  if (scope == "train") return VerifyScope::kTrain;
  if (scope == "classify") return VerifyScope::kClassify;
  if (scope == "all") return VerifyScope::kAll;
  throw InputError("unknown scope '" + scope + "' (gqae | train | classify | all)");
}

int run_verify_command(const VerifyArgs& args) {
  VerifyOptions options;
  options.seed = args.seed;
  options.corrupt_q_sign = args.corrupt_q_sign;
  const VerifyReport verify_report = run_verify(parse_scope(args.scope), options);

  json report = base_report("verify");
  report["config"] = {{"scope", args.scope}, {"seed", args.seed}};
  for (const CheckResult& check : verify_report.checks) {
    report["results"].push_back({{"name", check.name},
                                 {"passed", check.passed},
                                 {"max_residual", check.max_residual},
                                 {"tolerance", check.tolerance},
                                 {"details", check.details}});
    report["residuals"][check.name] = check.max_residual;
  }
  report["passed"] = verify_report.all_passed();

  write_report(report, args.out);
  return verify_report.all_passed() ? kExitOk : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------
// resources

struct ResourceArgs {
  int m = 0;
  int n = 0;
  double kappa = 0.0;
  std::string data;
  double gamma = 1.0;
  std::vector<std::string> dataset_specs;
  std::string accuracies = "0.70,0.80,0.90,0.93,0.95,0.97,0.99";
  double p = 0.5;
  double epsilon = 0.1;
  int trials = 2000;
  std::uint64_t seed = 0;
  std::string out_json;
  std::string out_csv;
};

DatasetSpec parse_dataset_spec(const std::string& text) {
  // name:m:n:kappa
  std::vector<std::string> parts;
  std::string part;
  std::stringstream ss(text);
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 4) throw InputError("dataset spec must be name:m:n:kappa, got " + text);
  try {
    return DatasetSpec{parts[0], std::stoi(parts[1]), std::stoi(parts[2]), std::stod(parts[3])};
  } catch (const std::exception&) {
    throw InputError("dataset spec must be name:m:n:kappa, got " + text);
  }
}

json table_to_json(const ComparisonTable& table) {
  json out;
  out["metric"] = table.metric;
  out["accuracies"] = table.accuracies;
  out["rows"] = json::array();
  for (const ComparisonRow& row : table.rows) {
    json cells = json::array();
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      cells.push_back({{"accuracy", table.accuracies[i]},
                       {"value", row.cells[i].value},
                       {"formula", row.cells[i].formula}});
    out["rows"].push_back(
        {{"dataset", row.dataset}, {"algorithm", row.algorithm}, {"cells", std::move(cells)}});
  }
  return out;
}

// CSV cells reuse the JSON number serialization so both artifacts carry
// byte-identical values.
std::string csv_number(double value) { return json(value).dump(); }

std::string tables_to_csv(const ComparisonTables& tables,
                          const std::vector<std::pair<double, SwapTestReport>>& curves) {
  std::ostringstream out;
  out << "table,dataset,algorithm,accuracy,value,formula\n";
  for (const ComparisonTable* table : {&tables.qubits, &tables.complexity}) {
    for (const ComparisonRow& row : table->rows) {
      for (std::size_t i = 0; i < row.cells.size(); ++i) {
        out << table->metric << ',' << row.dataset << ',' << row.algorithm << ','
            << csv_number(table->accuracies[i]) << ',' << csv_number(row.cells[i].value) << ",\""
            << row.cells[i].formula << "\"\n";
      }
    }
  }
  out << "curve,p,epsilon,iterations\n";
  for (const auto& [p, report] : curves)
    for (const auto& [eps, iterations] : report.curve)
      out << "curve," << csv_number(p) << ',' << csv_number(eps) << ',' << iterations << '\n';
  return out.str();
}

int run_resources(const ResourceArgs& args) {
  std::vector<DatasetSpec> specs;
  for (const std::string& text : args.dataset_specs) specs.push_back(parse_dataset_spec(text));

  if (!args.data.empty()) {
    const TrainingSet ts = load_dataset_csv(args.data);
    validate(ts);
    const SvmSystem sys = build_system(build_kernel(ts), ts.labels, args.gamma);
    const SpectralDecomposition decomp = eigendecompose(sys.f_matrix);
    const double kappa = condition_number(decomp, 1e-10);
    specs.push_back(DatasetSpec{std::filesystem::path(args.data).stem().string(), ts.size(),
                                ts.dim(), kappa});
  }
  if (args.m > 0 || args.n > 0 || args.kappa > 0.0) {
    ResourceQuery query;
    query.m = args.m;
    query.n = args.n;
    query.kappa = args.kappa;
    query.epsilon = args.epsilon;
    query.p = args.p;
    validate(query);
    specs.push_back(DatasetSpec{"inline", args.m, args.n, args.kappa});
  }
  if (specs.empty())
    throw InputError("no inputs: pass --m/--n/--kappa, --data, or --dataset specs");

  std::vector<double> accuracies;
  for (double v : parse_inline_vector(args.accuracies)) accuracies.push_back(v);

  const ComparisonTables tables = emit_comparison_table(specs, accuracies);

  // swap-test baseline at the requested p plus the reference curve set
  std::vector<std::pair<double, SwapTestReport>> curves;
  for (double p : {0.1, 0.3, 0.5})
    curves.emplace_back(p, swap_test_baseline(p, args.epsilon, args.trials, args.seed));
  SwapTestReport requested = swap_test_baseline(args.p, args.epsilon, args.trials, args.seed);

  json report = base_report("resources");
  report["config"] = {{"accuracies", accuracies}, {"p", args.p},
                      {"epsilon", args.epsilon},  {"trials", args.trials},
                      {"seed", args.seed},        {"gamma", args.gamma}};
  json results;
  results["qubit_table"] = table_to_json(tables.qubits);
  results["complexity_table"] = table_to_json(tables.complexity);
  results["swap_test"] = {{"p", requested.p},
                          {"epsilon", requested.epsilon},
                          {"predicted_iterations", requested.predicted_iterations},
                          {"trials", requested.trials},
                          {"hit_fraction", requested.hit_fraction}};
  json curve_json = json::array();
  for (const auto& [p, curve_report] : curves) {
    json points = json::array();
    for (const auto& [eps, iterations] : curve_report.curve)
      points.push_back({{"epsilon", eps}, {"iterations", iterations}});
    curve_json.push_back({{"p", p}, {"points", std::move(points)}});
  }
  results["iteration_curves"] = std::move(curve_json);
  report["results"].push_back(std::move(results));

  write_report(report, args.out_json);
  if (!args.out_csv.empty()) {
    std::ofstream out(args.out_csv, std::ios::binary);
    if (!out) throw InputError("cannot write output file: " + args.out_csv);
    out << tables_to_csv(tables, curves);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amplitude-estimation SVM simulator"};
  app.require_subcommand(1);

  TrainArgs train_args;
  CLI::App* train = app.add_subcommand("train", "solve the kernel system and write a model");
  train->add_option("--data", train_args.data, "training CSV (label, features...)")->required();
  train->add_option("--gamma", train_args.gamma, "regularization hyperparameter");
  train->add_option("--k", train_args.k, "eigenvalue precision bits");
  train->add_option("--kappa-cap", train_args.kappa_cap, "condition-number cap");
  train->add_option("--epsilon", train_args.epsilon, "target accuracy (metadata)");
  train->add_option("--out", train_args.out, "model output path");
  train->set_config("--config", "", "flat key=value config file");

  ClassifyArgs classify_args;
  CLI::App* classify =
      app.add_subcommand("classify", "classify queries by amplitude estimation");
  classify->set_help_flag("--help", "print help");  // frees -h for the width option
  classify->add_option("--model", classify_args.model, "model JSON from train")->required();
  classify->add_option("--query", classify_args.query, "query CSV path or inline vector")
      ->required();
  classify->add_option("--h", classify_args.h, "counting-register width");
  classify->add_option("--mode", classify_args.mode, "sample | modal | full-distribution");
  classify->add_option("--seed", classify_args.seed, "measurement seed");
  classify->add_option("--out", classify_args.out, "report output path (default stdout)");
  classify->set_config("--config", "", "flat key=value config file");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--scope", verify_args.scope, "gqae | train | classify | all");
  verify->add_option("--seed", verify_args.seed, "suite seed");
  verify->add_option("--out", verify_args.out, "report output path (default stdout)");
  verify->add_flag("--corrupt-q-sign", verify_args.corrupt_q_sign)->group("");
  verify->set_config("--config", "", "flat key=value config file");

  ResourceArgs resource_args;
  CLI::App* resources =
      app.add_subcommand("resources", "emit qubit and complexity comparison tables");
  resources->add_option("--m", resource_args.m, "training-set size");
  resources->add_option("--n", resource_args.n, "feature dimension");
  resources->add_option("--kappa", resource_args.kappa, "condition number");
  resources->add_option("--data", resource_args.data, "derive m, n, kappa from a CSV dataset");
  resources->add_option("--gamma", resource_args.gamma, "regularization for --data");
  resources->add_option("--dataset", resource_args.dataset_specs,
                        "extra dataset spec name:m:n:kappa (repeatable)");
  resources->add_option("--accuracies", resource_args.accuracies, "comma-separated accuracies");
  resources->add_option("--p", resource_args.p, "swap-test success probability");
  resources->add_option("--epsilon", resource_args.epsilon, "swap-test error target");
  resources->add_option("--trials", resource_args.trials, "Monte-Carlo trials");
  resources->add_option("--seed", resource_args.seed, "Monte-Carlo seed");
  resources->add_option("--out-json", resource_args.out_json, "JSON output path");
  resources->add_option("--out-csv", resource_args.out_csv, "CSV output path");
  resources->set_config("--config", "", "flat key=value config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (train->parsed()) return run_train(train_args);
    if (classify->parsed()) return run_classify(classify_args);
    if (verify->parsed()) return run_verify_command(verify_args);
    if (resources->parsed()) return run_resources(resource_args);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
