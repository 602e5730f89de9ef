#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vknot/cli.hpp"

namespace vknot::cli {
namespace {

TEST(ReadLines, SkipsCommentsAndBlanks) {
  EXPECT_EQ(read_code_lines("# head\n\n  O1+U1+  \nF1F1 # tail\r\n"),
            (std::vector<std::string>{"O1+U1+", "F1F1"}));
}

TEST(Validate, ExitCodes) {
  EXPECT_EQ(cmd_validate({"O1+U1+", "@"}).exit_status, kSuccess);
  const RunReport bad = cmd_validate({"O1+U1+", "O1+U1-"});
  EXPECT_EQ(bad.exit_status, kInputError);
  EXPECT_TRUE(bad.items[0]["ok"].get<bool>());
  EXPECT_FALSE(bad.items[1]["ok"].get<bool>());
}

TEST(Invariants, JsonShape) {
  const RunReport r = cmd_invariants({"O1+O2+U1+U2+"}, {.oracle = true, .parity_lint = false});
  ASSERT_EQ(r.exit_status, kSuccess);
  const auto& res = r.items[0]["result"];
  EXPECT_EQ(res["J"], 2);
  EXPECT_EQ(res["writhe"], 2);
  EXPECT_EQ(res["bracket"].dump(), "[[-2,2]]");
  EXPECT_EQ(res["inv"].dump(), "[[-4,2]]");
  EXPECT_EQ(res["lambda"].dump(), R"({"num":[[-4,1]],"den":[[0,1]]})");
  EXPECT_EQ(res["linking"].dump(), R"([["2"]])");
  EXPECT_TRUE(res["oracle"]["match"].get<bool>());
  std::vector<std::string> keys;
  for (const auto& [k, v] : res.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"J", "writhe", "bracket", "inv", "lambda", "linking", "flags", "oracle"}));
}

TEST(Invariants, LinkHasNullJ) {
  const RunReport r = cmd_invariants({"O1+V2;U1+V2"});
  EXPECT_TRUE(r.items[0]["result"]["J"].is_null());
  EXPECT_EQ(r.items[0]["result"]["linking"][0][1], "1/2");
}

TEST(Invariants, RejectsFlatInput) {
  EXPECT_EQ(cmd_invariants({"F1F1"}).exit_status, kInputError);
}

TEST(Output, DeterministicAndOrdered) {
  const std::vector<std::string> batch{"O1+U2+O3+U1+O2+U3+", "O1+V2;U1+V2", "O1+O2+U1+U2+"};
  const std::string a = render(cmd_invariants(batch), Format::Json);
  const std::string b = render(cmd_invariants(batch), Format::Json);
  EXPECT_EQ(a, b);
  const RunReport r = cmd_invariants(batch);
  for (std::size_t i = 0; i < batch.size(); ++i) EXPECT_EQ(r.items[i]["input"], batch[i]);
  EXPECT_EQ(render(r, Format::Text).substr(0, 20), "O1+U2+O3+U1+O2+U3+: ");
}

TEST(Oracle, TraceText) {
  const std::string text = render(cmd_oracle({"O1+O2+U1+U2+"}), Format::Text);
  EXPECT_NE(text.find("state 2 BB loops=2 colorings=2"), std::string::npos);
  EXPECT_NE(text.find("bracket=2*A^-2"), std::string::npos);
}

TEST(Color, CountsAndVerdicts) {
  const RunReport r = cmd_color({"F1F2F3F2F1F3", "F1V2;F1V2", "F1F2F3;F1F2F3"}, {.colors = 2, .enumerate = true});
  EXPECT_EQ(r.items[0]["result"]["count"], 2);
  EXPECT_EQ(r.items[0]["result"]["colorings"].size(), 2u);
  EXPECT_EQ(r.items[1]["result"]["verdict"], "uncolorable for all n");
  EXPECT_EQ(r.items[2]["result"]["verdict"], "uncolorable for n <= 2");
  EXPECT_EQ(cmd_color({"O1+U1+"}, {}).exit_status, kInputError);
  EXPECT_EQ(cmd_color({"@;@;@"}, {.colors = 3, .enumerate = true, .limit = 5}).exit_status, kOtherError);
}

TEST(Graph, Commands) {
  const std::string petersen = testing::read_text(testing::data_path("graphs/petersen.g"));
  const RunReport r = cmd_graph("petersen", petersen, {.matchings = true, .color = 3u, .translate = 0u, .verify = true});
  ASSERT_EQ(r.exit_status, kSuccess);
  const auto& res = r.items[0]["result"];
  EXPECT_EQ(res["matchings"]["count"], 6);
  EXPECT_EQ(res["color"]["count"], 0);
  EXPECT_EQ(res["verify"].size(), 6u);
  EXPECT_EQ(cmd_graph("bad", "n 3\n", {}).exit_status, kInputError);
  EXPECT_EQ(cmd_graph("petersen", petersen, {.translate = 9u}).exit_status, kInputError);
}

TEST(Search, GoldenHit) {
  const RunReport r = cmd_search({.max_crossings = 4, .components = 2, .limit = 1u, .non_split = true});
  ASSERT_EQ(r.items.size(), 1u);
  EXPECT_EQ(r.items[0]["input"], "O1+O2+;U1+O3+U2+U3+");
  EXPECT_FALSE(r.items[0]["result"]["split"].get<bool>());
}

}  // namespace
}  // namespace vknot::cli
