#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "vknot/gauss_code.hpp"

namespace vknot {
namespace {

TEST(Parse, RoundTripsCorpus) {
  for (const auto& code : testing::full_corpus()) {
    EXPECT_EQ(parse(code.render()), code) << code.render();
  }
  for (const auto& code : testing::flat_corpus()) {
    EXPECT_EQ(parse(code.render()), code) << code.render();
  }
}

TEST(Parse, RandomRoundTrip) {
  testing::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto code = testing::random_full_code(rng, i % 7, 1 + i % 3, i % 3);
    EXPECT_EQ(parse(code.render()), code) << code.render();
  }
}

TEST(Parse, Structure) {
  const DiagramCode c = parse("O1+V7;U1+V7;@");
  ASSERT_EQ(c.component_count(), 3u);
  EXPECT_TRUE(c.component(2).empty());
  EXPECT_EQ(c.classical_count(), 1u);
  ASSERT_EQ(c.table().virtuals().size(), 1u);
  EXPECT_EQ(c.mode_name(), "full");
  EXPECT_TRUE(c.is_full());
  EXPECT_FALSE(c.is_flat());

  const auto& x = c.table()[0];
  EXPECT_EQ(x.label, "1");
  EXPECT_EQ(x.sign, 1);
  EXPECT_EQ(x.over.component, 0u);
  EXPECT_EQ(x.under.component, 1u);
  EXPECT_FALSE(x.is_self_crossing());
}

TEST(Parse, MultiCharacterLabels) {
  const DiagramCode c = parse("Oab_1-Ux2+Uab_1-Ox2+");
  EXPECT_EQ(c.classical_count(), 2u);
  EXPECT_NE(c.table().index_of("ab_1"), CrossingTable::npos);
  EXPECT_EQ(c.table().index_of("zz"), CrossingTable::npos);
  EXPECT_EQ(c.render(), "Oab_1-Ux2+Uab_1-Ox2+");
}

TEST(Parse, FlatAndVirtualOnly) {
  const DiagramCode flat = parse("F1F2V3F1F2V3");
  EXPECT_TRUE(flat.is_flat());
  EXPECT_FALSE(flat.is_full());
  EXPECT_EQ(flat.mode_name(), "flat");
  // A purely virtual code counts as both.
  const DiagramCode v = parse("V1V1");
  EXPECT_TRUE(v.is_full());
  EXPECT_TRUE(v.is_flat());
}

TEST(Parse, SyntaxErrors) {
  for (const char* bad : {"", "O1", "O+", "X1+", "O1+U1+;", ";O1+U1+", "O1*U1+", "V1+V1", "F1+F1"}) {
    EXPECT_THROW((void)parse(bad), CodeError) << bad;
  }
  try {
    (void)parse("O1+U1?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Validate, Errors) {
  auto message = [](const char* text) {
    try {
      (void)parse(text);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_EQ(message("O1+F2F2U1+"), "label 2: mode mixing: flat pass in a code with over/under passes");
  EXPECT_EQ(message("O1+U2+U1+"), "label 2: single occurrence");
  EXPECT_EQ(message("O1+O1+"), "label 1: repeated role (two over passes)");
  EXPECT_EQ(message("O1+U1-"), "label 1: sign mismatch");
  EXPECT_EQ(message("V1O2+U2+"), "label 1: virtual label not paired");
  EXPECT_EQ(message("O1+V1"), "label 1: label used for both virtual and classical passes");
  EXPECT_EQ(message("O1+U1+O1+"), "label 1: more than two occurrences");
  EXPECT_EQ(message("O1+U1+"), "accepted");
}

TEST(Operations, MirrorSwapsRolesAndSigns) {
  const DiagramCode t = parse("O1+U2+O3+U1+O2+U3+");
  EXPECT_EQ(mirror(t).render(), "U1-O2-U3-O1-U2-O3-");
  EXPECT_EQ(mirror(mirror(t)), t);
  EXPECT_THROW((void)mirror(parse("F1F1")), CodeError);
}

TEST(Operations, ShadowForgetsCrossingData) {
  EXPECT_EQ(shadow_of(parse("O1+V2U1+V2")).render(), "F1V2F1V2");
  EXPECT_EQ(shadow_of(parse("@")).render(), "@");
}

TEST(Operations, ReverseComponent) {
  const DiagramCode hopf = parse("O1+O2+;U1+U2+");
  EXPECT_EQ(reverse_component(hopf, 0).render(), "O2-O1-;U1-U2-");
  const DiagramCode knot = parse("O1+U2-O3-U1+O4+U3-O2-U4+");
  // Self-crossings keep their sign.
  EXPECT_EQ(reverse_component(knot, 0).render(), "U4+O2-U3-O4+U1+O3-U2-O1+");
  EXPECT_EQ(reverse_component(reverse_component(hopf, 1), 1), hopf);
  EXPECT_THROW((void)reverse_component(hopf, 2), CodeError);
}

TEST(Operations, RotateComponent) {
  const DiagramCode t = parse("O1+U2+O3+U1+O2+U3+");
  EXPECT_EQ(rotate_component(t, 0, 2).render(), "O3+U1+O2+U3+O1+U2+");
  EXPECT_EQ(rotate_component(t, 0, 6), t);
  EXPECT_EQ(rotate_component(parse("@"), 0, 5).render(), "@");
}

TEST(Operations, FreshLabel) {
  const DiagramCode c = parse("O1+V2U1+V2;Ox-Ux-");
  EXPECT_EQ(c.fresh_label(), "3");
  EXPECT_EQ(c.fresh_label(1), "4");
  EXPECT_TRUE(c.uses_label("x"));
  EXPECT_FALSE(c.uses_label("3"));
}

}  // namespace
}  // namespace vknot
