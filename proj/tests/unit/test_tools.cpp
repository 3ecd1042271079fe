#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "balforest/errors.hpp"
#include "balforest/io.hpp"
#include "balforest/tools/bench.hpp"
#include "balforest/tools/commands.hpp"
#include "balforest/tools/verify.hpp"

namespace balforest::tools {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "balforest");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("balforest_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(Verify, EverySuitePassesAtSmallScale) {
  for (VerifySuite suite : all_verify_suites()) {
    VerifySuiteSpec spec{suite, {}, 0, 1};
    switch (suite) {
      case VerifySuite::BalancedVertices:
        spec.sizes = {8, 9};
        spec.trials = 10;
        break;
      case VerifySuite::Interpolation:
      case VerifySuite::Claim9:
        spec.sizes = {8};
        spec.trials = 20;
        break;
      case VerifySuite::Bounds:
        spec.sizes = {100};
        spec.trials = 5;
        break;
      case VerifySuite::C0Star:
        spec.sizes = {8};
        break;
      case VerifySuite::Perturbed:
        spec.sizes = {200};
        break;
      case VerifySuite::Expectation21:
        spec.sizes = {64};
        spec.trials = 500;
        break;
    }
    const auto report = run_verify(spec);
    EXPECT_TRUE(report.passed()) << report.to_json().dump(2);
    const auto j = report.to_json();
    EXPECT_EQ(j["suite"], std::string(to_string(suite)));
    EXPECT_FALSE(j["properties"].empty());
  }
}

TEST(Verify, RejectsBadSpecs) {
  EXPECT_THROW(parse_verify_suite("nope"), InvalidInput);
  EXPECT_EQ(parse_verify_suite("expectation-2.1"), VerifySuite::Expectation21);
  EXPECT_THROW(run_verify({VerifySuite::C0Star, {10}, 1, 0}), InvalidInput);
  EXPECT_THROW(run_verify({VerifySuite::Bounds, {100}, -1, 0}), InvalidInput);
}

TEST(Bench, RowsWithinBoundAndSorted) {
  BenchGrid grid;
  grid.sizes = {16, 32, 48, 64};
  grid.families = {ForestKind::Path, ForestKind::Star, ForestKind::Random};
  const auto rows = run_bench(grid);
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_LE(rows[i].achieved, rows[i].bound);
    if (i > 0) EXPECT_LE(rows[i - 1].n, rows[i].n);
    if (rows[i].family == ForestKind::Star) {
      EXPECT_EQ(rows[i].max_degree, rows[i].n - 1);
      EXPECT_LE(rows[i].achieved, 0.5 * rows[i].max_degree + 9);
    }
    if (rows[i].family == ForestKind::Random) EXPECT_LE(rows[i].max_degree, std::max(2, rows[i].n / 8));
  }
}

TEST(Bench, ByteIdenticalReruns) {
  BenchGrid grid;
  grid.sizes = {16, 33, 40};
  grid.families = {ForestKind::Path, ForestKind::Random, ForestKind::Broom};
  grid.seeds_per_cell = 2;
  std::ostringstream a;
  std::ostringstream b;
  write_bench_csv(a, run_bench(grid));
  grid.threads = 3;
  write_bench_csv(b, run_bench(grid));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "n,delta,family,seed,achieved,bound,certified_bound,millis");
}

using Cli = TempDir;

TEST_F(Cli, GenerateThenSolve) {
  const auto c = path("c.txt");
  const auto f = path("f.txt");
  ASSERT_EQ(cli({"gen-colouring", "--kind", "random", "--n", "33", "--seed", "5", "--out", c}).code, kSuccess);
  ASSERT_EQ(cli({"gen-forest", "--kind", "random", "--n", "33", "--max-degree", "6", "--seed", "2", "--out", f}).code,
            kSuccess);
  const auto run = cli({"solve", "--colouring", c, "--forest", f, "--seed", "7", "--json", path("r.json"),
                        "--trace", path("t.jsonl")});
  ASSERT_EQ(run.code, kSuccess) << run.err;
  const auto j = nlohmann::json::parse(run.out);
  EXPECT_TRUE(j["within_theorem"].get<bool>());
  EXPECT_TRUE(j["balanced"].get<bool>());
  std::ifstream saved(path("r.json"));
  EXPECT_EQ(nlohmann::json::parse(saved), j);
  // Same seed, same output.
  EXPECT_EQ(cli({"solve", "--colouring", c, "--forest", f, "--seed", "7"}).out, run.out);
  // The embedding in the report is consistent with the files.
  const auto e = io::embedding_from_json(j["embedding"], io::load_forest(f), io::load_colouring(c));
  EXPECT_EQ(std::abs(e.sum()), j["achieved"].get<int>());
}

TEST_F(Cli, OtherGenerators) {
  EXPECT_EQ(cli({"gen-colouring", "--kind", "c0", "--n", "12", "--out", path("c0.txt")}).code, kSuccess);
  EXPECT_EQ(cli({"gen-colouring", "--kind", "perturbed", "--n", "100", "--epsilon", "1/10", "--out", path("p.txt")}).code,
            kSuccess);
  EXPECT_EQ(io::load_colouring(path("p.txt")).n(), 100);
  EXPECT_EQ(cli({"gen-colouring", "--kind", "random", "--n", "6", "--out", path("x.txt")}).code, kUsage);
  EXPECT_EQ(cli({"gen-colouring", "--kind", "zebra", "--n", "8", "--out", path("x.txt")}).code, kUsage);
  EXPECT_EQ(cli({"gen-forest", "--kind", "broom", "--n", "10", "--max-degree", "7", "--out", path("b.txt")}).code,
            kSuccess);
}

TEST_F(Cli, OracleModesAndRefusal) {
  const auto c = path("c.txt");
  const auto f = path("f.txt");
  cli({"gen-colouring", "--kind", "c0", "--n", "8", "--out", c});
  cli({"gen-forest", "--kind", "star", "--n", "8", "--out", f});
  auto run = cli({"oracle", "--colouring", c, "--forest", f});
  ASSERT_EQ(run.code, kSuccess) << run.err;
  EXPECT_EQ(nlohmann::json::parse(run.out)["value"], 3);

  run = cli({"oracle", "--colouring", c, "--forest", f, "--mode", "sign", "--partial", R"({"map":[0,null,null,null,null,null,null,null]})"});
  ASSERT_EQ(run.code, kSuccess) << run.err;
  EXPECT_EQ(nlohmann::json::parse(run.out)["verdict"]["min_sum"], nlohmann::json::parse(run.out)["verdict"]["max_sum"]);

  run = cli({"oracle", "--colouring", c, "--forest", f, "--mode", "sign-fixing", "--set-l", "0", "--set-u", "1,2",
             "--minimal"});
  ASSERT_EQ(run.code, kSuccess) << run.err;
  EXPECT_TRUE(nlohmann::json::parse(run.out)["sign_fixing"].get<bool>());

  EXPECT_EQ(cli({"oracle", "--colouring", c, "--forest", f, "--mode", "sign", "--budget", "10"}).code, kOracleRefusal);

  const auto big_c = path("big.txt");
  const auto big_f = path("bigf.txt");
  cli({"gen-colouring", "--kind", "random", "--n", "12", "--out", big_c});
  cli({"gen-forest", "--kind", "path", "--n", "12", "--out", big_f});
  EXPECT_EQ(cli({"oracle", "--colouring", big_c, "--forest", big_f}).code, kOracleRefusal);
}

TEST_F(Cli, UsageErrorsAndBounds) {
  EXPECT_EQ(cli({}).code, kUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(cli({"solve", "--colouring", path("missing.txt"), "--forest", path("missing.txt")}).code, kUsage);
  EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, kUsage);
  EXPECT_EQ(cli({"--help"}).code, kSuccess);
  const auto run = cli({"bounds", "--n", "100", "--delta", "20"});
  ASSERT_EQ(run.code, kSuccess);
  EXPECT_NEAR(nlohmann::json::parse(run.out)["theorem3"].get<double>(), 19.0998, 1e-4);
  const auto eta = cli({"bounds", "--n", "1000", "--delta", "150", "--eta", "1/10"});
  EXPECT_NEAR(nlohmann::json::parse(eta.out)["corollary4"].get<double>(), 4000.0 / 98.0, 1e-9);
}

TEST_F(Cli, VerifyAndBenchCommands) {
  auto run = cli({"verify", "--suite", "c0-star", "--n", "8,12"});
  EXPECT_EQ(run.code, kSuccess);
  EXPECT_TRUE(nlohmann::json::parse(run.out)["passed"].get<bool>());
  run = cli({"bench", "--n", "16,20", "--families", "path,star", "--seed", "3"});
  ASSERT_EQ(run.code, kSuccess) << run.err;
  EXPECT_EQ(std::count(run.out.begin(), run.out.end(), '\n'), 5);
  EXPECT_EQ(cli({"bench", "--n", "16,20", "--families", "path,star", "--seed", "3", "--threads", "2"}).out, run.out);
}

}  // namespace
}  // namespace balforest::tools
