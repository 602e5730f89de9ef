#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vknot/shadow_color.hpp"

namespace vknot {
namespace {

TEST(ShadowCsp, VirtualPassesAreContracted) {
  const ShadowCsp csp = build_shadow_csp(parse("F1V2F1V2"));
  EXPECT_EQ(csp.arc_count, 4u);
  EXPECT_EQ(csp.variable_count, 2u);
  EXPECT_EQ(csp.variable_of_arc, (std::vector<std::size_t>{0, 1, 1, 0}));
  EXPECT_EQ(csp.constraints.size(), 1u);
  EXPECT_THROW((void)build_shadow_csp(parse("O1+U1+")), CodeError);
}

TEST(ShadowColor, SmallCounts) {
  EXPECT_EQ(count_shadow_colorings(parse("@"), 3), 3u);
  EXPECT_EQ(count_shadow_colorings(parse("@;@"), 3), 9u);
  EXPECT_EQ(count_shadow_colorings(parse("F1F1"), 3), 6u);
  EXPECT_EQ(count_shadow_colorings(parse("F1F1"), 1), 0u);
  EXPECT_EQ(count_shadow_colorings(parse("F1F2F3F2F1F3"), 2), 2u);
  EXPECT_EQ(count_shadow_colorings(parse("F1V2;F1V2"), 6), 0u);
  EXPECT_EQ(count_shadow_colorings(parse("F1F2F3;F1F2F3"), 2), 0u);
  EXPECT_EQ(count_shadow_colorings(parse("F1F2F3;F1F2F3"), 3), 6u);
  EXPECT_EQ(count_shadow_colorings(parse("@"), 0), 0u);
}

TEST(ShadowColor, MatchesBruteForceOnCorpus) {
  for (const auto& code : testing::flat_corpus()) {
    for (unsigned n = 0; n <= 4; ++n) {
      EXPECT_EQ(count_shadow_colorings(code, n), testing::brute_force_shadow_colorings(code, n))
          << code.render() << " n=" << n;
    }
  }
}

TEST(ShadowColor, MatchesBruteForceOnRandomCodes) {
  testing::Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    const auto code = testing::random_flat_code(rng, i % 4, 1 + i % 3, i % 3);
    for (unsigned n = 1; n <= 4; ++n) {
      EXPECT_EQ(count_shadow_colorings(code, n), testing::brute_force_shadow_colorings(code, n))
          << code.render() << " n=" << n;
    }
  }
}

TEST(Enumerate, LexicographicAndValid) {
  const auto all = enumerate_shadow_colorings(parse("F1F2F3F2F1F3"), 3);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(all.front(), (ArcColoring{0, 1, 0, 1, 0, 1}));
  EXPECT_THROW((void)enumerate_shadow_colorings(parse("@;@;@"), 3, 10), ColoringLimitExceeded);
  EXPECT_EQ(enumerate_shadow_colorings(parse("F1V2F1V2"), 2).front(), (ArcColoring{0, 1, 1, 0}));
  EXPECT_EQ(enumerate_shadow_colorings(parse("F1F2;F1F2"), 2).size(), 4u);
  EXPECT_TRUE(enumerate_shadow_colorings(parse("F1V2;F1V2"), 3).empty());
  EXPECT_EQ(enumerate_shadow_colorings(parse("@"), 3), (std::vector<ArcColoring>{{0}, {1}, {2}}));
}

TEST(Parity, TwoColorCriterion) {
  testing::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto code = testing::random_flat_code(rng, i % 5, 1 + i % 3, i % 3);
    EXPECT_EQ(two_color_criterion(code), count_shadow_colorings(code, 2) > 0) << code.render();
  }
}

TEST(Parity, Obstruction) {
  const auto odd = parity_obstruction(parse("F1F2F3;F1F2F3"));
  EXPECT_TRUE(odd.obstructed);
  EXPECT_EQ(odd.components, (std::vector<std::size_t>{0, 1}));
  // Odd flat-pass count alone does not rule out three colors.
  EXPECT_FALSE(odd.self_conflict);

  const auto dumbbell = parity_obstruction(parse("F1V2;F1V2"));
  EXPECT_TRUE(dumbbell.self_conflict);
  EXPECT_EQ(dumbbell.self_conflict_components, (std::vector<std::size_t>{0, 1}));

  const auto fine = parity_obstruction(parse("F1F2F1F2"));
  EXPECT_FALSE(fine.obstructed);
  EXPECT_FALSE(fine.self_conflict);
}

TEST(Parity, SelfConflictMeansUncolorable) {
  testing::Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto code = testing::random_flat_code(rng, 1 + i % 3, 1 + i % 2, 1 + i % 3);
    if (!parity_obstruction(code).self_conflict) continue;
    for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(count_shadow_colorings(code, n), 0u) << code.render();
  }
}

}  // namespace
}  // namespace vknot
