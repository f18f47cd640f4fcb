#include "repalg/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using repalg::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DimsSingleDegree) {
  const Outcome o = call({"dims", "--m", "2", "--n", "2", "--k", "2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("2\t21\n"), std::string::npos) << o.out;
  const auto j = nlohmann::json::parse(call({"dims", "--m", "2", "--n", "2", "--k", "2", "--format", "json"}).out);
  EXPECT_EQ(j["rows"][0]["dim"], 21);
  EXPECT_EQ(call({"dims", "--m", "2", "--n", "2", "--k", "2", "--format", "csv"}).out, "m,n,k,dim\n2,2,2,21\n");
}

TEST(Cli, BasisY) {
  const Outcome o = call({"basis", "--which", "Y", "--m", "2", "--n", "2", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["count"], 18);
  EXPECT_EQ(j["elements"].size(), 18u);
}

TEST(Cli, NormalFormOfCommutator) {
  const Outcome o = call({"normal-form", "--word", "[x1,x2]", "--entry", "1,2", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["min_degree"], 2);
}

TEST(Cli, EtaAndTheta) {
  const Outcome e = call({"eta", "--aut", "K12", "--k", "1"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("s(1,2;x1) -> "), std::string::npos);
  const Outcome t = call({"theta", "--aut", "S"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("f2 = -1 x1\n"), std::string::npos) << t.out;
  const Outcome h = call({"theta", "--aut", "S", "--target", "abelian"});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_NE(h.out.find("fH = -1 x1\n"), std::string::npos) << h.out;
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"verify", "--suite", "context", "--m", "2", "--n", "2", "--seed", "5"};
  const Outcome a = call(args), b = call(args);
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyJsonSchema) {
  const Outcome o = call({"verify", "--suite", "13", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.out;
  const auto j = nlohmann::json::parse(o.out);
  ASSERT_EQ(j["checks"].size(), 1u);
  EXPECT_EQ(j["checks"][0]["status"], "pass");
  EXPECT_TRUE(j["checks"][0]["check"].is_string());
  EXPECT_TRUE(j["checks"][0].contains("details"));
}

TEST(Cli, InvalidArgumentsExitTwo) {
  EXPECT_EQ(call({"dims", "--m", "1"}).code, 2);
  EXPECT_EQ(call({"dims", "--cap", "0"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"normal-form", "--word", "x1", "--entry", "1;2"}).code, 2);
  EXPECT_EQ(call({"normal-form", "--word", "x9", "--entry", "1,2"}).code, 2);
  EXPECT_EQ(call({"basis", "--which", "Z"}).code, 2);
  EXPECT_EQ(call({"theta", "--aut", "S", "--format", "csv"}).code, 2);
  EXPECT_EQ(call({"eta", "--aut", "U", "--k", "1"}).code, 2);
  EXPECT_EQ(call({"theta", "--aut", "X7"}).code, 2);
  EXPECT_EQ(call({"verify", "--suite", "99"}).code, 2);
  EXPECT_EQ(call({"dims", "--format", "yaml"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const Outcome o = call({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("verify"), std::string::npos);
}
