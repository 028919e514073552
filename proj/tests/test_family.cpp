#include <gtest/gtest.h>

#include "fpd/error.hpp"
#include "fpd/family.hpp"

using namespace fpd;

TEST(GenerateFamily, LoopFreeA3) {
  const auto spec = generate_family({FamilyKind::A, 3, {0, 0, 0}});
  EXPECT_EQ(spec.vertex_count(), 3u);
  ASSERT_EQ(spec.arrow_count(), 2u);
  EXPECT_EQ(spec.arrow(0), (Arrow{"x_2", 1, 2}));
  EXPECT_EQ(spec.arrow(1), (Arrow{"x_3", 2, 3}));
}

TEST(GenerateFamily, Qnm11) {
  const auto spec = generate_family({FamilyKind::Qnm, 0, {1, 1}});
  EXPECT_EQ(spec.vertex_count(), 2u);
  ASSERT_EQ(spec.arrow_count(), 4u);
  EXPECT_EQ(spec.arrow(0), (Arrow{"x", 1, 2}));
  EXPECT_EQ(spec.arrow(1), (Arrow{"y", 2, 1}));
  EXPECT_EQ(spec.arrow(2), (Arrow{"a_1", 1, 1}));
  EXPECT_EQ(spec.arrow(3), (Arrow{"b_1", 2, 2}));
}

TEST(GenerateFamily, InvalidParameters) {
  EXPECT_THROW(generate_family({FamilyKind::E, 5, {0, 0, 0, 0, 0}}), ValidationError);
  EXPECT_THROW(generate_family({FamilyKind::D, 3, {0, 0, 0}}), ValidationError);
  EXPECT_THROW(generate_family({FamilyKind::A, 0, {}}), ValidationError);
  EXPECT_THROW(generate_family({FamilyKind::A, 3, {0, 0}}), ValidationError);
  EXPECT_THROW(generate_family({FamilyKind::Qnm, 0, {1}}), ValidationError);
  EXPECT_THROW(generate_family({FamilyKind::A3Reversed, 0, {1, 1}}), ValidationError);
}

TEST(GenerateFamily, DBranchesAtNMinus2) {
  const auto spec = generate_family({FamilyKind::D, 5, {0, 0, 0, 0, 1}});
  EXPECT_EQ(spec.quiver().arrow_count(1, 2), 1u);
  EXPECT_EQ(spec.quiver().arrow_count(2, 3), 1u);
  EXPECT_EQ(spec.quiver().arrow_count(3, 4), 1u);
  EXPECT_EQ(spec.quiver().arrow_count(3, 5), 1u);
  EXPECT_EQ(spec.arrow(4).id, "b_5^1");
  EXPECT_EQ(spec.loop_counts(), (std::vector<std::size_t>{0, 0, 0, 0, 1}));
}

TEST(GenerateFamily, EBranchIsTwoOnFour) {
  const auto spec = generate_family({FamilyKind::E, 7, {0, 0, 0, 0, 0, 0, 2}});
  EXPECT_EQ(spec.quiver().arrow_count(1, 3), 1u);
  EXPECT_EQ(spec.quiver().arrow_count(3, 4), 1u);
  EXPECT_EQ(spec.quiver().arrow_count(4, 2), 1u);
  EXPECT_EQ(spec.quiver().arrow_count(6, 7), 1u);
  EXPECT_EQ(spec.arrow_count(), 8u);
  EXPECT_EQ(spec.arrow(5).id, "x_2");
  EXPECT_EQ(spec.arrow(6).id, "c_7^1");
}

TEST(GenerateFamily, A3ReversedOrientation) {
  const auto spec = generate_family({FamilyKind::A3Reversed, 0, {1, 0, 2}});
  EXPECT_EQ(spec.quiver().arrow_count(1, 2), 1u);
  EXPECT_EQ(spec.quiver().arrow_count(3, 2), 1u);
  EXPECT_EQ(spec.loop_counts(), (std::vector<std::size_t>{1, 0, 2}));
}

TEST(FamilyKind, ParsingIsCaseInsensitive) {
  EXPECT_EQ(parse_family_kind("qnm"), FamilyKind::Qnm);
  EXPECT_EQ(parse_family_kind("A3Rev"), FamilyKind::A3Reversed);
  EXPECT_EQ(parse_family_kind("e"), FamilyKind::E);
  EXPECT_THROW(parse_family_kind("F4"), ValidationError);
}
