#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = mobius::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(MOBIUS_TEST_DIR) + "/data/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, AutMobiusFive) {
  const auto r = run({"aut", "--graph", "mobius:5"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "order 20, D_10");
}

TEST(Cli, AutK33AndFile) {
  EXPECT_TRUE(contains(run({"aut", "--graph", "k33"}).out, "order 72, S_3 wr Z_2"));
  const auto r = run({"aut", "--graph", data("triangle_plus_edge.txt")});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "order 2, Z_2"));
}

TEST(Cli, AutJson) {
  const auto r = run({"aut", "--graph", "mobius:2", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("order"), 24);
  EXPECT_EQ(doc.at("name"), "S4");
}

TEST(Cli, ClassifyJson) {
  const auto r = run({"classify", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("groups").size(), 11u);
}

TEST(Cli, ClassifyText) {
  const auto r = run({"classify", "--n", "4"});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "7 isomorphism classes"));
}

TEST(Cli, ClassifyZeroIsInputError) {
  EXPECT_EQ(run({"classify", "--n", "0"}).status, 2);
  EXPECT_EQ(run({"classify", "--n", "x"}).status, 2);
  EXPECT_EQ(run({"classify", "--n", "3", "--format", "xml"}).status, 2);
}

TEST(Cli, StabilizerCatalogInput) {
  const auto r = run({"stabilizer", "--decoration", data("hexagon_oriented.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "order 6, Z_6"));
  EXPECT_TRUE(contains(r.out, "catalog entry hex-Z6"));
  EXPECT_FALSE(contains(r.out, "upper bound"));
}

TEST(Cli, StabilizerOtherInputCarriesCaveat) {
  const auto r = run({"stabilizer", "--decoration", data("ladder5_rim.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "order 4, D_2"));
  EXPECT_TRUE(contains(r.out, "upper bound"));
}

TEST(Cli, StabilizerRefined) {
  const auto r = run({"stabilizer", "--decoration", data("fan_twists.json"), "--refined"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "order 18"));
  EXPECT_EQ(run({"stabilizer", "--decoration", data("ladder5_rim.json"), "--refined"}).status, 2);
}

TEST(Cli, StabilizerInputErrors) {
  auto r = run({"stabilizer", "--decoration", "missing.json"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "missing.json"));

  r = run({"stabilizer", "--decoration", data("bad_syntax.json")});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "line 4, column 46"));

  r = run({"stabilizer", "--decoration", data("bad_orientation.json")});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "knots[0].orientation"));

  r = run({"stabilizer", "--decoration", data("missing_orientation.json")});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "missing orientation"));
}

TEST(Cli, UnknownVerbAndFlag) {
  auto r = run({"frobnicate"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "Usage"));
  r = run({"aut", "--graph", "k33", "--colour"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "Usage"));
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"aut"}).status, 2);
  EXPECT_EQ(run({"aut", "--graph", "mobius:0"}).status, 2);
  EXPECT_EQ(run({"aut", "--graph", "mobius:20"}).status, 2);
  EXPECT_EQ(run({"lemma", "z3"}).status, 2);
  EXPECT_EQ(run({"corollary", "s5"}).status, 2);
}

TEST(Cli, Help) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "classify"));
}

TEST(Cli, Admissible) {
  const auto r = run({"admissible"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "order 36, D_3 x D_3"));
  EXPECT_TRUE(contains(r.out, "11 isomorphism classes"));
}

TEST(Cli, Lemma) {
  const auto r = run({"lemma", "z2cubed"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "yes"));
}

TEST(Cli, Catalog) {
  auto r = run({"catalog"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "fan-Z3xZ3"));
  r = run({"catalog", "--name", "hex-D2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "order 4, D_2"));
  EXPECT_EQ(run({"catalog", "--name", "hex-D5"}).status, 2);
}

TEST(Cli, Verify) {
  const auto r = run({"verify"});
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_FALSE(contains(r.out, "FAIL"));
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"classify", "--n", "3", "--format", "json"},
        std::vector<std::string>{"aut", "--graph", "k33"},
        std::vector<std::string>{"admissible"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
