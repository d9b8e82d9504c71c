#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"

using symrank::cli::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "symrank");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = symrank::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const auto o = run(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return json::parse(o.out);
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, TheoremTwoGoldenRatio) {
  const auto j = run_json({"theorem2", "--theta", "1/2", "--n", "10", "--sign", "+"});
  EXPECT_EQ(j["result"]["beta"], "3/2+1/2*sqrt(5)");
  EXPECT_LE(j["result"]["report"]["exact_rank"].get<int>(), 13);
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["config"]["command"], "theorem2");
}

TEST(Cli, FanoDesignRank) {
  const auto j = run_json({"design-rank", "--design", "fano", "--alpha", "1", "--beta", "2"});
  EXPECT_LE(j["result"]["report"]["exact_rank"].get<int>(), 10);
  EXPECT_EQ(j["result"]["report"]["nu"], 6);
  EXPECT_TRUE(j["result"]["dichotomy_holds"].get<bool>());
}

TEST(Cli, RankOfZeroMatrix) {
  const auto path = temp_file("zero5.csv", "0,0,0,0,0\n0,0,0,0,0\n0,0,0,0,0\n0,0,0,0,0\n0,0,0,0,0\n");
  const auto j = run_json({"rank", "--in", path});
  EXPECT_EQ(j["result"]["rank"], 0);
  EXPECT_EQ(j["result"]["nullity"], 5);
}

TEST(Cli, RankOverQuadraticField) {
  const auto path = temp_file("q5.csv", "1,sqrt(5)\nsqrt(5),5\n");
  const auto j = run_json({"rank", "--in", path});
  EXPECT_EQ(j["result"]["rank"], 1);
  EXPECT_EQ(j["result"]["field"], "Q(sqrt(5))");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"random-rank-stats", "--n", "9", "--samples", "12", "--seed", "5"};
  const auto a = run(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const auto c = run(threaded);
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_EQ(json::parse(a.out)["result"], json::parse(c.out)["result"]);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"theorem2", "--bogus"}).code, 2);
  EXPECT_EQ(run({"theorem2", "--theta", "3/2"}).code, 2);
  EXPECT_EQ(run({"rank", "--in", "/nonexistent/file.csv"}).code, 2);
  EXPECT_EQ(run({"mu", "--alpha", "1", "--beta", "1/0"}).code, 2);
  EXPECT_EQ(run({"hadamard", "--kind", "catalog", "--param", "6"}).code, 2);
}

TEST(Cli, VerificationFailureExitsOne) {
  const auto path = temp_file("bad.json", R"({"n": 4, "sets": [[1,2],[3,4]]})");
  const auto o = run({"family-check", "--in", path});
  EXPECT_EQ(o.code, 1);
  const auto j = json::parse(o.out);
  EXPECT_FALSE(j["result"]["theta_intersecting"].get<bool>());
  EXPECT_EQ(j["result"]["violation"], json::parse("[[1,2],[3,4]]"));
}

TEST(Cli, CsvFormat) {
  const auto o = run({"--format", "csv", "hadamard", "--kind", "sylvester", "--param", "1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "1,1\n1,-1\n");
  const auto s = run({"--format", "csv", "onebytwo", "--k-minus-lambda", "2", "--bound", "10"});
  EXPECT_EQ(s.out, "alpha,beta\n1,2\n");
}

TEST(Cli, PairFromTable) {
  const auto j = run_json({"mu", "--table", "1,2,3,5", "--alpha", "0", "--beta", "1"});
  EXPECT_EQ(j["result"]["mu_squared"], "5");
  EXPECT_EQ(j["result"]["f_ba"], "3");
}

TEST(Cli, TournamentRoundTrip) {
  const auto csv = run({"--format", "csv", "tournament", "--n", "6", "--seed", "2"});
  ASSERT_EQ(csv.code, 0);
  const auto forward = run_json({"tournament", "--n", "6", "--seed", "2"});
  const auto back = run_json({"tournament", "--matrix", temp_file("t6.csv", csv.out)});
  EXPECT_EQ(back["result"]["tournament"], forward["result"]["tournament"]);
}

TEST(Cli, BigraphRoundTrip) {
  const std::vector<std::string> g{"--graph-kind", "random", "--m", "3", "--n", "4", "--seed", "7"};
  auto fwd = g;
  fwd.insert(fwd.begin(), "bigraph");
  auto csv_args = fwd;
  csv_args.insert(csv_args.begin(), {"--format", "csv"});
  const auto csv = run(csv_args);
  auto back_args = fwd;
  back_args.insert(back_args.end(), {"--matrix", temp_file("g.csv", csv.out)});
  EXPECT_EQ(run_json(back_args)["result"]["graph"], run_json(fwd)["result"]["graph"]);
}

TEST(Cli, FamilySearchBeatsBaseline) {
  const auto j = run_json({"family-search", "--n", "8", "--time-budget", "20", "--threads", "2"});
  EXPECT_GE(j["result"]["size"].get<int>(), 14);
  EXPECT_EQ(j["config"]["threads"], "2");
}

TEST(Cli, WritesOutFile) {
  const auto path = (std::filesystem::path(::testing::TempDir()) / "report.json").string();
  const auto o = run({"--out", path, "theorem1-verify", "--graph-kind", "heawood"});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  EXPECT_TRUE(json::parse(in)["result"]["report"]["holds"].get<bool>());
}
