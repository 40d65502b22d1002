#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "powergraph/cli.hpp"
#include "test_util.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "powergraph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = powergraph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST(CliInfo, Examples) {
  auto z12 = run({"info", "Z(12)"});
  EXPECT_EQ(z12.code, 0);
  EXPECT_TRUE(has(z12.out, "order: 12"));
  EXPECT_TRUE(has(z12.out, "cyclic subgroups: 6"));
  EXPECT_TRUE(has(z12.out, "euler sum: 12 (holds)"));
  auto q8 = run({"info", "Q(8)"});
  EXPECT_TRUE(has(q8.out, "involutions: 1\n"));
  EXPECT_TRUE(has(q8.out, "cyclic subgroups: 5"));
  auto bad = run({"info", "Z(0)"});
  EXPECT_NE(bad.code, 0);
  EXPECT_TRUE(has(bad.err, "error"));
  auto j = nlohmann::json::parse(run({"info", "S(3)", "--json"}).out);
  EXPECT_EQ(j["maximal_involutions"].size(), 3U);
}

TEST(CliDim, Examples) {
  auto z30 = run({"dim", "Z(30)"});
  EXPECT_EQ(z30.code, 0);
  EXPECT_TRUE(has(z30.out, "dim (formula): 23"));
  auto v = run({"dim", "Z(2)xZ(2)xZ(3)", "--verify"});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(has(v.out, "dim (formula): 5"));
  EXPECT_TRUE(has(v.out, "dim (oracle): 5"));
  EXPECT_TRUE(has(v.out, "MATCH"));
  auto j = nlohmann::json::parse(run({"dim", "Z(6)", "--json"}).out);
  EXPECT_EQ(j["dim_formula"], 4);
}

TEST(CliDim, InconclusiveBudgetExitsZero) {
  ::setenv("POWERGRAPH_BUDGET_SECONDS", "1e-9", 1);
  auto r = run({"dim", "Z(30)", "--verify"});
  auto j = run({"dim", "Z(30)", "--verify", "--json"});
  ::unsetenv("POWERGRAPH_BUDGET_SECONDS");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "dim (oracle): inconclusive"));
  EXPECT_TRUE(has(r.out, "dim (formula): 23"));
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(j.out)["dim_oracle"].is_null());
  EXPECT_TRUE(has(j.err, "inconclusive"));
  EXPECT_EQ(run({"dim", "Z(30)", "--verify", "--max-order", "20"}).code, powergraph::cli::kExitUsage);
}

TEST(CliDim, BudgetFromEnvironment) {
  powergraph::cli::Options opts;
  ::setenv("POWERGRAPH_BUDGET_SECONDS", "7", 1);
  EXPECT_DOUBLE_EQ(powergraph::cli::effective_budget_seconds(opts), 7.0);
  opts.budget_seconds = 3;
  EXPECT_DOUBLE_EQ(powergraph::cli::effective_budget_seconds(opts), 3.0);
  ::setenv("POWERGRAPH_BUDGET_SECONDS", "nonsense", 1);
  opts.budget_seconds.reset();
  EXPECT_DOUBLE_EQ(powergraph::cli::effective_budget_seconds(opts), 60.0);
  ::unsetenv("POWERGRAPH_BUDGET_SECONDS");
}

TEST(CliVerify, Examples) {
  auto d6 = run({"verify", "D(6)"});
  EXPECT_EQ(d6.code, 0);
  EXPECT_TRUE(has(d6.out, "all checks passed"));
  EXPECT_FALSE(has(d6.out, "FAIL"));
  auto z27 = run({"verify", "Z(27)"});
  EXPECT_EQ(z27.code, 0);
  EXPECT_TRUE(has(z27.out, "power graph is complete"));
  auto bad = run({"verify", "table:" + testutil::data_path("bad.tbl")});
  EXPECT_NE(bad.code, 0);
  EXPECT_TRUE(has(bad.err, "associativity"));
  EXPECT_TRUE(has(bad.err, "("));
}

TEST(CliIso, Examples) {
  EXPECT_TRUE(has(run({"iso", "Z(4)", "Z(2)xZ(2)"}).out, "NOT isomorphic"));
  auto d3 = run({"iso", "D(3)", "S(3)", "--verify"});
  EXPECT_EQ(d3.code, 0);
  EXPECT_TRUE(has(d3.out, "isomorphic\n"));
  EXPECT_TRUE(has(d3.out, "AGREE"));
  EXPECT_TRUE(has(run({"iso", "E(3,2)", "Z(9)"}).out, "NOT isomorphic"));
  auto heis = run({"iso", "E(3,3)", "table:" + testutil::data_path("heis27.tbl"), "--verify", "--json"});
  auto j = nlohmann::json::parse(heis.out);
  EXPECT_EQ(j["isomorphic"], true);
  EXPECT_EQ(j["agree"], true);
}

TEST(CliGraph, DotAndJson) {
  auto path = std::filesystem::temp_directory_path() / "powergraph_cli_test.dot";
  auto r = run({"graph", "Z(2)", "--dot", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "graph G {\n  0 [label=\"e\"];\n  1 [label=\"g\"];\n  0 -- 1;\n}\n");
  std::filesystem::remove(path);
  auto j = nlohmann::json::parse(run({"graph", "Z(4)", "--orientation", "--json"}).out);
  EXPECT_EQ(j["arcs"].size(), 6U);
  EXPECT_NE(run({"graph", "Z(2)", "--dot", "/nonexistent-dir/x.dot"}).code, 0);
}

TEST(CliClasses, Output) {
  auto r = run({"classes", "Q(8)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "twin classes: 4"));
  EXPECT_TRUE(has(r.out, "class structure: PASS"));
}

TEST(CliCorpus, SubsetAndJson) {
  auto r = run({"corpus", "--max-order", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has(r.out, "all passed"));
  EXPECT_FALSE(has(r.out, "S(4)"));
  auto j = nlohmann::json::parse(run({"corpus", "--max-order", "8", "--json"}).out);
  EXPECT_EQ(j["passed"], true);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["result"], "MATCH");
}

TEST(CliCorpus, FullRunIsDeterministic) {
  auto a = run({"corpus"});
  auto b = run({"corpus"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(has(a.out, "MISMATCH"));
  EXPECT_FALSE(has(a.out, "FAIL"));
}

TEST(CliUsage, BadArguments) {
  EXPECT_EQ(run({}).code, powergraph::cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, powergraph::cli::kExitUsage);
  EXPECT_EQ(run({"dim"}).code, powergraph::cli::kExitUsage);
  EXPECT_EQ(run({"dim", "Z(6)", "--budget-seconds", "-4"}).code, powergraph::cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}
