#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "vknot/invariants.hpp"
#include "vknot/statesum.hpp"

namespace vknot {
namespace {

TEST(States, GrayOrder) {
  const auto states = enumerate_states(parse("O1+U2+O3+U1+O2+U3+"));
  ASSERT_EQ(states.size(), 8u);
  std::set<std::string> seen;
  for (std::size_t k = 0; k < states.size(); ++k) {
    seen.insert(state_bits(states[k]));
    if (k == 0) continue;
    int changed = 0;
    for (std::size_t i = 0; i < 3; ++i) changed += states[k][i] != states[k - 1][i];
    EXPECT_EQ(changed, 1);
  }
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(state_bits(gray_state(3, 0)), "AAA");
  EXPECT_EQ(state_bits(gray_state(3, 2)), "BBA");
  EXPECT_EQ(enumerate_states(parse("@")).size(), 1u);
}

TEST(Trace, CurlStates) {
  const DiagramCode curl = parse("O1+U1+");
  const auto a = trace_state(curl, {Smoothing::A});
  const auto b = trace_state(curl, {Smoothing::B});
  EXPECT_EQ(a.loop_count, 2u);
  EXPECT_EQ(b.loop_count, 1u);
  ASSERT_EQ(a.sites.size(), 1u);
  EXPECT_NE(a.sites[0].first, a.sites[0].second);
  EXPECT_EQ(b.sites[0].first, b.sites[0].second);
}

TEST(Trace, UnknotAndFreeLoops) {
  EXPECT_EQ(trace_state(parse("@;@;@"), {}).loop_count, 3u);
  EXPECT_EQ(trace_state(parse("V1V1"), {}).loop_count, 1u);
  EXPECT_EQ(trace_state(parse("V1;V1"), {}).loop_count, 2u);
  EXPECT_THROW((void)trace_state(parse("O1+U1+"), {}), CodeError);
}

TEST(Trace, ClassicalTrefoilLoopCounts) {
  // All-A and all-B states of the standard trefoil diagram.
  const DiagramCode t = parse("O1+U2+O3+U1+O2+U3+");
  EXPECT_EQ(trace_state(t, gray_state(3, 0)).loop_count, 2u);
  EXPECT_EQ(trace_state(t, {Smoothing::B, Smoothing::B, Smoothing::B}).loop_count, 3u);
}

TEST(Colorings, MatchesChromaticPolynomial) {
  testing::Rng rng(4);
  for (int i = 0; i < 120; ++i) {
    const auto code = testing::random_full_code(rng, 1 + i % 6, 1 + i % 3, i % 2);
    for (const auto& state : enumerate_states(code)) {
      const StateGraph g = trace_state(code, state);
      for (unsigned n : {1u, 2u, 3u}) {
        EXPECT_EQ(count_proper_colorings(g, n), testing::chromatic_count(g.loop_count, g.sites, n))
            << code.render() << " " << state_bits(state);
      }
    }
  }
}

TEST(Nary, TwoColorsCollapsesToBinaryBracket) {
  for (const auto& code : testing::full_corpus()) {
    EXPECT_EQ(bracket_oracle(code), binary_bracket(code)) << code.render();
  }
}

TEST(Nary, MirrorSwapsVariables) {
  testing::Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto code = testing::random_full_code(rng, 1 + i % 5, 1 + i % 2, i % 2);
    for (unsigned n : {2u, 3u}) {
      EXPECT_EQ(nary_bracket(mirror(code), n), nary_bracket(code, n).swap_variables()) << code.render();
    }
  }
}

TEST(Nary, ThreeColorsExamples) {
  // One crossing-free loop: n colorings.
  EXPECT_EQ(nary_bracket(parse("@"), 3), BiLaurent(3));
  // Curl: A state has two loops on one site (n(n-1)), B a self-touching loop (0).
  EXPECT_EQ(nary_bracket(parse("O1+U1+"), 3), BiLaurent::monomial(6, 1, 0));
  EXPECT_EQ(nary_bracket(parse("O1-U1-"), 3), BiLaurent::monomial(6, 0, 1));
}

TEST(Trace, AllStatesRecords) {
  const auto traces = trace_all_states(parse("O1+O2+U1+U2+"), 2);
  ASSERT_EQ(traces.size(), 4u);
  EXPECT_EQ(state_bits(traces[2].state), "BB");
  EXPECT_EQ(traces[2].loops, 2u);
  EXPECT_EQ(traces[2].colorings, 2);
  EXPECT_EQ(traces[0].colorings, 0);
}

}  // namespace
}  // namespace vknot
