#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "powg_cli/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = powg::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, Solve) {
  auto r = run({"solve", "--u", "17"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["lower"], 1);
  EXPECT_EQ(parse(r)["upper"], 1);

  r = run({"solve", "--u", "16"});
  EXPECT_EQ(parse(r)["upper"], "inf");

  r = run({"solve", "--u", "3", "--format", "text"});
  EXPECT_NE(r.out.find("lower=2"), std::string::npos);
  EXPECT_NE(r.out.find("exact"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve", "--u", "fact("}).code, 2);
  EXPECT_EQ(run({"solve", "--u", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, TableToFile) {
  const auto path = std::filesystem::temp_directory_path() / "powg_table_test.csv";
  auto r = run({"table", "--from", "2", "--to", "20", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string csv = ss.str();
  EXPECT_EQ(csv.rfind("u,lower,lower_method,upper,upper_method,exact\n", 0), 0u);
  EXPECT_NE(csv.find("\n16,inf,"), std::string::npos);
  EXPECT_NE(csv.find("\n17,1,"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 20);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"table", "--from", "2", "--to", "5", "--out", "/nonexistent/dir/t.csv"}).code, 2);
  EXPECT_EQ(run({"table", "--from", "9", "--to", "5"}).code, 2);
}

TEST(Cli, TableIsIndependentOfJobs) {
  const auto a = run({"--jobs", "1", "table", "--from", "2", "--to", "60"});
  const auto b = run({"--jobs", "3", "table", "--from", "2", "--to", "60"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Certify) {
  auto r = run({"certify", "--v", "3", "--l", "fact(16)", "--r", "fact(16)", "--k", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["certified_lower"], 3);

  r = run({"certify", "--v", "3", "--l", "17", "--r", "6", "--k", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(parse(r)["certified_lower"].is_null());
  EXPECT_FALSE(parse(r)["conditions"]["exponent_gap"].get<bool>());

  EXPECT_EQ(run({"certify", "--v", "3", "--l", "1", "--l", "2", "--r", "6", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"certify", "--v", "9", "--l", "1", "--r", "6", "--k", "2"}).code, 2);
}

TEST(Cli, Dnb) {
  auto r = run({"dnb", "--v", "3", "--kmax", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("99353223"), std::string::npos);
  EXPECT_NE(r.out.find("157418073"), std::string::npos);

  r = run({"dnb", "--kmax", "3"});
  EXPECT_EQ(parse(r)["rows"].size(), 3u);
  EXPECT_EQ(run({"dnb", "--kmax", "0"}).code, 2);
}

TEST(Cli, Bounds) {
  auto r = run({"bounds", "--u", "2304"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("nondivisor"), std::string::npos);
  EXPECT_EQ(run({"bounds"}).code, 2);
}

TEST(Cli, Axioms) {
  auto r = run({"axioms", "--limit", "1000", "--windows-limit", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_TRUE(j["axioms"].contains("divisor_windows"));
  EXPECT_TRUE(j["axioms"].contains("no_gap"));
  EXPECT_EQ(run({"axioms", "--limit", "2"}).code, 2);
}

TEST(Cli, ReproductionSuites) {
  auto r = run({"verify-paper", "--suite", "bprime"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS bprime"), std::string::npos);
  EXPECT_EQ(r.out.rfind("seed=20240601 jobs=", 0), 0u);
  EXPECT_EQ(run({"verify-paper", "--suite", "nosuch"}).code, 2);

  r = run({"--seed", "7", "verify-paper", "--suite", "c1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["seed"], 7);
}

TEST(Cli, JobsFromEnvironment) {
  ::setenv("POWG_JOBS", "3", 1);
  auto r = run({"verify-paper", "--suite", "bprime"});
  EXPECT_EQ(r.out.rfind("seed=20240601 jobs=3", 0), 0u) << r.out;
  r = run({"--jobs", "2", "verify-paper", "--suite", "bprime"});
  EXPECT_EQ(r.out.rfind("seed=20240601 jobs=2", 0), 0u) << r.out;
  ::unsetenv("POWG_JOBS");
}

TEST(Cli, PlayAsPowerator) {
  // 5 is answered first by 3 (illegal for challenge 2), then by 2; {2, 5} is lost.
  auto r = run({"play", "--role", "powerator", "--u", "5", "--transcript"}, "3\n2\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rejected"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Challenger wins"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"outcome\": \"ChallengerWins\""), std::string::npos) << r.out;

  EXPECT_EQ(run({"play", "--role", "powerator", "--u", "16"}, "").code, 2);
}

TEST(Cli, PlayAsChallenger) {
  std::string moves;
  for (int x : {7, 100, 33, 5000, 48, 1}) moves += std::to_string(x) + "\n";
  // From a power of two the engine's powers of two never lose.
  auto r = run({"play", "--role", "challenger", "--u", "64", "--max-rounds", "6"}, moves);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("Challenger wins"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("still standing after 6 rounds"), std::string::npos) << r.out;

  // From 48 the answer 4096 to 5000 lands in (48^2, 2 * 48^2).
  r = run({"play", "--role", "challenger", "--u", "48", "--max-rounds", "6"}, moves);
  EXPECT_NE(r.out.find("Challenger wins: 48 * 48 < 4096"), std::string::npos) << r.out;

  r = run({"play", "--role", "challenger", "--u", "48"}, "quit\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"play", "--role", "referee", "--u", "48"}).code, 2);
}
