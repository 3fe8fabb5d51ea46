#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <string>

#include "cli_util.hpp"

using cliutil::CommandResult;
using cliutil::run_cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new fs::path(cliutil::make_scratch_dir("cli"));
    cliutil::write_file(*dir_ / "toy.csv",
                        "1,0.5,1.2\n"
                        "-1,-0.4,-0.9\n"
                        "1,0.8,0.3\n"
                        "-1,-0.7,-0.2\n");
  }
  static void TearDownTestSuite() {
    fs::remove_all(*dir_);
    delete dir_;
    dir_ = nullptr;
  }

  static fs::path path(const std::string& name) { return *dir_ / name; }
  static std::string toy() { return (*dir_ / "toy.csv").string(); }

  static fs::path* dir_;
};

fs::path* CliTest::dir_ = nullptr;

}  // namespace

TEST_F(CliTest, TrainWritesModelWithSmallResidual) {
  const CommandResult result =
      run_cli("train --data " + toy() + " --out " + path("model.json").string(), *dir_);
  ASSERT_EQ(result.exit_code, 0) << result.err;

  const json model = json::parse(cliutil::read_file(path("model.json")));
  EXPECT_EQ(model.at("schema_version"), "1");
  EXPECT_EQ(model.at("command"), "train");
  EXPECT_LE(model.at("residuals").at("solver_residual").get<double>(), 1e-8);
  const json& r = model.at("results").at(0);
  EXPECT_EQ(r.at("m"), 4);
  EXPECT_EQ(r.at("n"), 2);
  EXPECT_EQ(r.at("alpha").size(), 4u);
  EXPECT_EQ(r.at("training").at("vectors").size(), 4u);
}

TEST_F(CliTest, MissingFileIsInputError) {
  const CommandResult result = run_cli("train --data " + path("nope.csv").string(), *dir_);
  EXPECT_EQ(result.exit_code, 2);
}

TEST_F(CliTest, BadLabelReportsLineNumber) {
  cliutil::write_file(path("bad_label.csv"), "1,0.5\n2,0.25\n-1,1.0\n");
  const CommandResult result = run_cli("train --data " + path("bad_label.csv").string(), *dir_);
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("line 2"), std::string::npos) << result.err;
}

TEST_F(CliTest, RaggedRowIsInputError) {
  cliutil::write_file(path("ragged.csv"), "1,0.5,1.0\n-1,0.25\n");
  const CommandResult result = run_cli("train --data " + path("ragged.csv").string(), *dir_);
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.err.find("line 2"), std::string::npos) << result.err;
}

TEST_F(CliTest, HeaderRowIsAccepted) {
  cliutil::write_file(path("header.csv"), "label,f1\n1,0.5\n-1,-0.25\n");
  const CommandResult result =
      run_cli("train --data " + path("header.csv").string() + " --out " +
                  path("header_model.json").string(),
              *dir_);
  EXPECT_EQ(result.exit_code, 0) << result.err;
}

TEST_F(CliTest, DegenerateSystemIsNumericalFailure) {
  // identical points with opposite labels and a huge gamma: the target is
  // supported only on a below-threshold eigendirection
  cliutil::write_file(path("degenerate.csv"), "1,1.0\n-1,1.0\n");
  const CommandResult result =
      run_cli("train --data " + path("degenerate.csv").string() + " --gamma 1e15", *dir_);
  EXPECT_EQ(result.exit_code, 3);
  EXPECT_NE(result.err.find("numerically zero operator"), std::string::npos) << result.err;
}

TEST_F(CliTest, ClassifyRoundTripAgreesWithClassicalOracle) {
  ASSERT_EQ(run_cli("train --data " + toy() + " --out " + path("rt_model.json").string(), *dir_)
                .exit_code,
            0);
  cliutil::write_file(path("queries.csv"), "0.6,1.0\n-0.5,-0.8\n0.9,0.1\n");
  const CommandResult result =
      run_cli("classify --model " + path("rt_model.json").string() + " --query " +
                  path("queries.csv").string() + " --h 10 --seed 5 --out " +
                  path("classify.json").string(),
              *dir_);
  ASSERT_EQ(result.exit_code, 0) << result.err;

  const json report = json::parse(cliutil::read_file(path("classify.json")));
  ASSERT_EQ(report.at("results").size(), 3u);
  for (const json& record : report.at("results")) {
    if (!record.at("boundary").get<bool>())
      EXPECT_TRUE(record.at("agreement").get<bool>()) << record.dump(2);
  }
}

TEST_F(CliTest, InlineQueryWorks) {
  ASSERT_EQ(
      run_cli("train --data " + toy() + " --out " + path("inline_model.json").string(), *dir_)
          .exit_code,
      0);
  const CommandResult result = run_cli(
      "classify --model " + path("inline_model.json").string() + " --query \"0.6,1.0\" --h 9",
      *dir_);
  EXPECT_EQ(result.exit_code, 0) << result.err;
  const json report = json::parse(result.out);
  EXPECT_EQ(report.at("results").size(), 1u);
}

TEST_F(CliTest, DimensionMismatchIsInputError) {
  ASSERT_EQ(
      run_cli("train --data " + toy() + " --out " + path("dim_model.json").string(), *dir_)
          .exit_code,
      0);
  const CommandResult result = run_cli(
      "classify --model " + path("dim_model.json").string() + " --query \"1.0,2.0,3.0\"", *dir_);
  EXPECT_EQ(result.exit_code, 2);
}

TEST_F(CliTest, TooManyTrainingPointsForQuantumClassification) {
  std::string csv;
  for (int i = 0; i < 8; ++i)
    csv += (i % 2 == 0 ? std::string("1,") : std::string("-1,")) + std::to_string(0.1 * (i + 1)) +
           ",0.5\n";
  cliutil::write_file(path("eight.csv"), csv);
  ASSERT_EQ(run_cli("train --data " + path("eight.csv").string() + " --out " +
                        path("eight_model.json").string(),
                    *dir_)
                .exit_code,
            0);
  const CommandResult result = run_cli(
      "classify --model " + path("eight_model.json").string() + " --query \"0.3,0.5\"", *dir_);
  EXPECT_EQ(result.exit_code, 2);
}

TEST_F(CliTest, SampleModeIsDeterministicUnderSeed) {
  ASSERT_EQ(
      run_cli("train --data " + toy() + " --out " + path("det_model.json").string(), *dir_)
          .exit_code,
      0);
  const std::string args = "classify --model " + path("det_model.json").string() +
                           " --query \"0.6,1.0\" --mode sample --seed 11 --out ";
  ASSERT_EQ(run_cli(args + path("det_a.json").string(), *dir_).exit_code, 0);
  ASSERT_EQ(run_cli(args + path("det_b.json").string(), *dir_).exit_code, 0);
  EXPECT_EQ(cliutil::read_file(path("det_a.json")), cliutil::read_file(path("det_b.json")));
  EXPECT_FALSE(cliutil::read_file(path("det_a.json")).empty());
}

TEST_F(CliTest, VerifyAllPassesAndIsByteIdentical) {
  const std::string args = "verify --scope all --seed 7 --out ";
  const CommandResult first = run_cli(args + path("verify_a.json").string(), *dir_);
  ASSERT_EQ(first.exit_code, 0) << first.err;
  ASSERT_EQ(run_cli(args + path("verify_b.json").string(), *dir_).exit_code, 0);
  EXPECT_EQ(cliutil::read_file(path("verify_a.json")), cliutil::read_file(path("verify_b.json")));

  const json report = json::parse(cliutil::read_file(path("verify_a.json")));
  EXPECT_TRUE(report.at("passed").get<bool>());
  EXPECT_GE(report.at("results").size(), 8u);
}

TEST_F(CliTest, VerifyScopesRunSubsets) {
  for (const std::string scope : {"gqae", "train", "classify"}) {
    const CommandResult result = run_cli("verify --scope " + scope + " --seed 3", *dir_);
    EXPECT_EQ(result.exit_code, 0) << scope << ": " << result.err;
  }
  EXPECT_EQ(run_cli("verify --scope bogus", *dir_).exit_code, 2);
}

TEST_F(CliTest, CorruptedOperatorSignFailsVerification) {
  const CommandResult result =
      run_cli("verify --scope gqae --seed 7 --corrupt-q-sign --out " +
                  path("corrupt.json").string(),
              *dir_);
  EXPECT_EQ(result.exit_code, 1);
  const json report = json::parse(cliutil::read_file(path("corrupt.json")));
  EXPECT_FALSE(report.at("passed").get<bool>());
}

TEST_F(CliTest, ResourcesJsonAndCsvCarryIdenticalValues) {
  const CommandResult result = run_cli(
      "resources --dataset a:958:9:120 --dataset b:306:3:80 --dataset c:351:34:60 "
      "--dataset d:270:13:45 --dataset e:345:6:90 --dataset f:345:6:70 "
      "--accuracies \"0.7,0.8,0.9\" --out-json " +
          path("res.json").string() + " --out-csv " + path("res.csv").string(),
      *dir_);
  ASSERT_EQ(result.exit_code, 0) << result.err;

  const json report = json::parse(cliutil::read_file(path("res.json")));
  const json& qubit_table = report.at("results").at(0).at("qubit_table");
  EXPECT_EQ(qubit_table.at("rows").size(), 12u);  // 6 datasets x 2 algorithms

  // every JSON cell value appears verbatim in the CSV
  const std::string csv = cliutil::read_file(path("res.csv"));
  for (const std::string table : {"qubit_table", "complexity_table"}) {
    for (const json& row : report.at("results").at(0).at(table).at("rows")) {
      for (const json& cell : row.at("cells")) {
        const std::string value = cell.at("value").dump();
        EXPECT_NE(csv.find("," + value + ","), std::string::npos)
            << table << " value " << value << " missing from CSV";
      }
    }
  }
}

TEST_F(CliTest, ResourceCurveFollowsQuadraticLaw) {
  const CommandResult result =
      run_cli("resources --m 10 --n 9 --kappa 50 --accuracies \"0.9\"", *dir_);
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = json::parse(result.out);
  for (const json& curve : report.at("results").at(0).at("iteration_curves")) {
    long long n_01 = -1, n_005 = -1;
    for (const json& point : curve.at("points")) {
      if (point.at("epsilon").get<double>() == 0.1) n_01 = point.at("iterations").get<long long>();
      if (point.at("epsilon").get<double>() == 0.05)
        n_005 = point.at("iterations").get<long long>();
    }
    ASSERT_GT(n_01, 0);
    EXPECT_EQ(n_005, 4 * n_01);
  }
}

TEST_F(CliTest, ResourcesFromDatasetComputesCondition) {
  const CommandResult result =
      run_cli("resources --data " + toy() + " --accuracies \"0.9\"", *dir_);
  ASSERT_EQ(result.exit_code, 0) << result.err;
  const json report = json::parse(result.out);
  const json& rows = report.at("results").at(0).at("qubit_table").at("rows");
  EXPECT_EQ(rows.at(0).at("dataset"), "toy");
}

TEST_F(CliTest, ConfigFileValuesAreOverriddenByFlags) {
  cliutil::write_file(path("train.conf"), "gamma=4.0\nk=30\n");
  ASSERT_EQ(run_cli("train --data " + toy() + " --config " + path("train.conf").string() +
                        " --gamma 2.0 --out " + path("conf_model.json").string(),
                    *dir_)
                .exit_code,
            0);
  const json model = json::parse(cliutil::read_file(path("conf_model.json")));
  EXPECT_DOUBLE_EQ(model.at("config").at("gamma").get<double>(), 2.0);  // flag wins
  EXPECT_EQ(model.at("config").at("k").get<int>(), 30);                 // config applies
}

TEST_F(CliTest, NoSubcommandIsInputError) {
  EXPECT_EQ(run_cli("", *dir_).exit_code, 2);
  EXPECT_EQ(run_cli("--help", *dir_).exit_code, 0);
}
