#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mobius/io.hpp"

using namespace mobius;

namespace {

std::string slurp(const std::string& relative) {
  std::ifstream in(std::string(MOBIUS_TEST_DIR) + "/" + relative);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string context_of(std::string_view text) {
  try {
    parse_decoration_json(text);
  } catch (const ParseError& e) {
    return e.context();
  }
  return "<no error>";
}

}  // namespace

TEST(DecorationJson, ParsesBuiltinGraph) {
  const Decoration d = parse_decoration_json(slurp("data/hexagon_oriented.json"));
  EXPECT_EQ(d.graph().vertex_count(), 6u);
  EXPECT_EQ(d.knots().size(), 6u);
  EXPECT_EQ(stabilizer(d).order(), 6u);
}

TEST(DecorationJson, ParsesInlineGraph) {
  const Decoration d = parse_decoration_json(R"({
    "graph": {"vertices": 3, "edges": [[1, 2], [2, 3], [3, 1]]},
    "knots": [{"edge": [2, 1], "label": "A", "invertible": false,
               "orientation": [1, 2]}]
  })");
  EXPECT_EQ(d.graph().edges().size(), 3u);
  EXPECT_EQ(stabilizer(d).order(), 1u);
}

TEST(DecorationJson, RoundTrip) {
  for (const auto& entry : catalog()) {
    const std::string text = decoration_to_json(entry.decoration);
    const Decoration back = parse_decoration_json(text);
    EXPECT_EQ(decoration_to_json(back), text) << entry.name;
    EXPECT_EQ(stabilizer(back), stabilizer(entry.decoration)) << entry.name;
  }
}

TEST(DecorationJson, SyntaxErrorsGiveLineAndColumn) {
  EXPECT_EQ(context_of(slurp("data/bad_syntax.json")), "line 4, column 46");
  EXPECT_EQ(context_of("{\n  \"graph\": k33\n}"), "line 2, column 12");
}

TEST(DecorationJson, SchemaErrorsGivePaths) {
  EXPECT_EQ(context_of(slurp("data/bad_orientation.json")),
            "knots[0].orientation");
  EXPECT_EQ(context_of(R"({"graph": "k33", "knots": [{"edge": [1, 2], "label": "A", "invertible": true}]})"),
            "knots[0].edge");
  EXPECT_EQ(context_of(R"({"graph": "k33", "knots": [{"edge": [1, 4], "invertible": true}]})"),
            "knots[0]");
  EXPECT_EQ(context_of(R"({"graph": "k33", "knots": [{"edge": [1, 4], "label": 3, "invertible": true}]})"),
            "knots[0].label");
  EXPECT_EQ(context_of(R"({"graph": "k33", "knots": [{"edge": [1, 4], "label": "A", "invertible": "no"}]})"),
            "knots[0].invertible");
  EXPECT_EQ(context_of(R"({"graph": "k33", "knotted_around": [{"outer": [1, 4]}]})"),
            "knotted_around[0]");
  EXPECT_EQ(context_of(R"({"graph": "k33", "extra": 1})"), "extra");
  EXPECT_EQ(context_of(R"({"knots": []})"), "document");
  EXPECT_EQ(context_of(R"([1, 2])"), "document");
  EXPECT_EQ(context_of(R"({"graph": "petersen"})"), "graph");
  EXPECT_EQ(context_of(R"({"graph": "mobius:1"})"), "graph");
  EXPECT_EQ(context_of(R"({"graph": {"vertices": 0, "edges": []}})"), "graph.vertices");
  EXPECT_EQ(context_of(R"({"graph": {"vertices": 3, "edges": [[1, 1]]}})"), "graph.edges[0]");
  EXPECT_EQ(context_of(R"({"graph": {"vertices": 3, "edges": [[1, 0]]}})"), "graph.edges[0][1]");
  EXPECT_EQ(context_of(R"({"graph": "k33", "knots": [{"edge": [1, 9], "label": "A", "invertible": true}]})"),
            "knots[0].edge");
}

TEST(DecorationJson, DuplicateKnotRejected) {
  EXPECT_EQ(context_of(R"({"graph": "k33", "knots": [
      {"edge": [1, 4], "label": "A", "invertible": true},
      {"edge": [4, 1], "label": "B", "invertible": true}]})"),
            "knots[1]");
}

TEST(ReportJson, MatchesGoldenFiles) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(report_to_json(classify(n)),
              slurp("golden/classify_n" + std::to_string(n) + ".json"))
        << "n=" << n;
  }
}

TEST(ReportJson, Schema) {
  const auto doc = nlohmann::json::parse(report_to_json(classify(3)));
  ASSERT_TRUE(doc.is_object());
  EXPECT_EQ(doc.at("n"), 3);
  ASSERT_EQ(doc.at("groups").size(), 11u);
  for (const auto& g : doc.at("groups")) {
    EXPECT_TRUE(g.at("name").is_string());
    EXPECT_TRUE(g.at("order").is_number_unsigned());
    EXPECT_TRUE(g.at("witness").is_string());
  }
  const auto k4 = nlohmann::json::parse(report_to_json(classify(2)));
  EXPECT_TRUE(k4.at("groups")[0].at("witness").is_null());
}

TEST(ReportText, MentionsWitnessAnchors) {
  const std::string text = report_to_text(classify(3));
  EXPECT_NE(text.find("11 isomorphism classes"), std::string::npos);
  EXPECT_NE(text.find("D_3 x D_3"), std::string::npos);
  EXPECT_NE(text.find("three-blade fan, no knots"), std::string::npos);
}

TEST(GroupJson, Fields) {
  const auto doc = nlohmann::json::parse(
      group_to_json(automorphisms(k33().graph), GroupName::wreath_s3_z2()));
  EXPECT_EQ(doc.at("order"), 72);
  EXPECT_EQ(doc.at("name"), "S3wrZ2");
  EXPECT_FALSE(doc.at("generators").empty());
}
