#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "corpus.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpa");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int status = lpa::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string graph(const std::string& name) { return lpa::testing::graph_path(name); }

nlohmann::json parsed(const Outcome& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST(Cli, ClassifyToeplitz) {
  const auto o = run({"classify", "--input", graph("toeplitz")});
  EXPECT_EQ(o.status, 0);
  const auto j = parsed(o);
  EXPECT_EQ(j["gr_type_I"], false);
  EXPECT_EQ(j["graded_self_injective"], false);
  EXPECT_EQ(j["sigma_V"], false);
  EXPECT_EQ(j["no_exit"], false);
}

TEST(Cli, ClassifyLoopReportsTriple) {
  const auto j = parsed(run({"classify", "--input", graph("loop")}));
  EXPECT_EQ(j["gr_type_I"], true);
  EXPECT_EQ(j["graded_prime"], true);
  EXPECT_EQ(j["central_triple"]["e2"], nlohmann::json::array());
  EXPECT_EQ(j["central_triple"]["e1"].size(), 1u);
}

TEST(Cli, DecomposeLoop) {
  const auto o = run({"decompose", "--input", graph("loop")});
  EXPECT_EQ(o.status, 0);
  const auto j = parsed(o);
  ASSERT_EQ(j["blocks"].size(), 1u);
  EXPECT_EQ(j["blocks"][0]["kind"], "cycle");
}

TEST(Cli, DecomposeToeplitzExitsTwoWithoutReport) {
  for (const auto& name : lpa::testing::exit_corpus()) {
    const auto o = run({"decompose", "--input", graph(name)});
    EXPECT_EQ(o.status, 2);
    EXPECT_TRUE(o.out.empty());
    EXPECT_FALSE(o.err.empty());
  }
}

TEST(Cli, MalformedInputExitsOne) {
  EXPECT_EQ(run({"classify", "--input", "/nonexistent/graph.json"}).status, 1);
  EXPECT_EQ(run({"classify", "--input", graph("loop"), "--field", "fp:10003"}).status, 1);
  EXPECT_EQ(run({"dims", "--input", graph("loop"), "--bound", "-1"}).status, 1);
  EXPECT_EQ(run({"frobnicate"}).status, 1);
  const auto bad = run({"idempotent-report", "--input", graph("a2"), "--element", "[{\"p\": [\"nope\"]}]"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, VerifyIsoAndCorruption) {
  const auto ok = run({"verify-iso", "--input", graph("tree5")});
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(parsed(ok)["all_passed"], true);
  const auto broken = run({"verify-iso", "--input", graph("tree5"), "--corrupt-phi"});
  EXPECT_EQ(broken.status, 3);
  EXPECT_EQ(parsed(broken)["all_passed"], false);
}

TEST(Cli, DimsTable) {
  const auto o = run({"dims", "--input", graph("a3"), "--bound", "3"});
  EXPECT_EQ(o.status, 0);
  const auto j = parsed(o);
  EXPECT_EQ(j["rows"].size(), 7u);
  EXPECT_EQ(j["rows"][4]["lpa_dim"], 2);
  EXPECT_EQ(j["all_match"], true);
}

TEST(Cli, RegularWitnessIsDeterministic) {
  const std::vector<std::string> args = {"regular-witness", "--input", graph("cycle3"), "--seed", "5", "--samples", "4"};
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = parsed(a);
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["samples"].size(), 4u);
  EXPECT_EQ(j["all_verified"], true);
  const auto c = run({"regular-witness", "--input", graph("cycle3"), "--seed", "6", "--samples", "4"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, RegularWitnessForSuppliedElement) {
  const auto o = run({"regular-witness", "--input", graph("loop"), "--element", R"([{"p": ["c"], "p_base": "v1"}])"});
  EXPECT_EQ(o.status, 0);
  const auto j = parsed(o);
  EXPECT_EQ(j["samples"][0]["degree_b"], -1);
  EXPECT_EQ(j["samples"][0]["aba_equals_a"], true);
}

TEST(Cli, IdempotentReportAndTypeWitness) {
  const auto o = run({"idempotent-report", "--input", graph("sink_loop"), "--element", R"([{"p_base": "v1", "q_base": "v1"}])"});
  EXPECT_EQ(o.status, 0);
  const auto j = parsed(o);
  EXPECT_EQ(j["abelian"], true);
  EXPECT_EQ(j["faithful"], false);

  const auto w = run({"type-witness", "--input", graph("sink_loop"), "--format", "text"});
  EXPECT_EQ(w.status, 0);
  EXPECT_NE(w.out.find("faithful: true"), std::string::npos);
}

TEST(Cli, PrimeFieldOption) {
  const auto o = run({"regular-witness", "--input", graph("parallel"), "--field", "fp:7", "--samples", "3"});
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(parsed(o)["field"], "F_7");
}
