#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fpd/error.hpp"
#include "fpd/family.hpp"
#include "fpd/quiver.hpp"

using namespace fpd;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(FPD_TEST_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(const std::string& text) {
  try {
    parse_quiver(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::vector<FamilySpec> sample_families() {
  return {{FamilyKind::A, 1, {0}},          {FamilyKind::A, 3, {1, 2, 3}},
          {FamilyKind::D, 4, {0, 1, 0, 2}}, {FamilyKind::D, 6, {1, 0, 0, 0, 0, 1}},
          {FamilyKind::E, 6, {0, 0, 1, 0, 0, 0}}, {FamilyKind::E, 8, {1, 1, 1, 1, 1, 1, 1, 1}},
          {FamilyKind::Qnm, 0, {3, 4}},     {FamilyKind::A3Reversed, 0, {2, 0, 1}}};
}

}  // namespace

TEST(ParseQuiver, EmptyQuiver) {
  const auto spec = parse_quiver("vertices: 1\nrelations: rad2");
  EXPECT_EQ(spec.vertex_count(), 1u);
  EXPECT_EQ(spec.arrow_count(), 0u);
  EXPECT_EQ(spec.loop_counts(), std::vector<std::size_t>{0});
}

TEST(ParseQuiver, FileMatchesGeneratedFamily) {
  const auto spec = parse_quiver(read_data("a2_loops_12.qv"));
  EXPECT_EQ(spec.loop_counts(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(spec, generate_family({FamilyKind::A, 2, {1, 2}}));
}

TEST(ParseQuiver, EndpointOutOfRange) {
  EXPECT_THROW(parse_quiver("vertices: 2\narrow x: 1 -> 3\nrelations: rad2"), ValidationError);
  EXPECT_EQ(error_line("vertices: 2\narrow x: 1 -> 3\nrelations: rad2"), 2u);
}

TEST(ParseQuiver, Errors) {
  EXPECT_EQ(error_line("vertices: 2\narrow x: 1 -> 2\narrow x: 2 -> 1\nrelations: rad2"), 3u);
  EXPECT_EQ(error_line("vertices: 2\nrelations: rad3"), 2u);
  EXPECT_EQ(error_line("vertices: 2\nfoo: 1\nrelations: rad2"), 2u);
  EXPECT_EQ(error_line("# header\nvertices: 0\nrelations: rad2"), 2u);
  EXPECT_EQ(error_line("vertices: 2\narrow x: 1 => 2\nrelations: rad2"), 2u);
  EXPECT_NE(error_line("vertices: 2"), 0u);
  EXPECT_NE(error_line("relations: rad2"), 0u);
}

TEST(ParseQuiver, LoopSugarAndComments) {
  const auto spec = parse_quiver(
      "vertices: 2  # two\n\narrow x: 1 -> 2\nloops 2: 2\nloops 2: 1\nrelations: rad2\n");
  ASSERT_EQ(spec.arrow_count(), 4u);
  EXPECT_EQ(spec.arrow(1).id, "loop_2_1");
  EXPECT_EQ(spec.arrow(3).id, "loop_2_3");
  EXPECT_EQ(spec.loop_counts(), (std::vector<std::size_t>{0, 3}));
}

TEST(ParseQuiver, RoundTripsRenderedFamilies) {
  for (const auto& f : sample_families()) {
    const auto spec = generate_family(f);
    EXPECT_EQ(parse_quiver(render_quiver(spec)), spec);
  }
}

TEST(StripLoops, A2WithLoops) {
  const auto stripped = strip_loops(generate_family({FamilyKind::A, 2, {1, 2}}));
  EXPECT_EQ(stripped.loop_counts, (std::vector<std::size_t>{1, 2}));
  ASSERT_EQ(stripped.base.arrow_count(), 1u);
  EXPECT_EQ(stripped.base.arrow(0), (Arrow{"x_2", 1, 2}));
}

TEST(StripLoops, LoopFreeIsIdentity) {
  const auto spec = generate_family({FamilyKind::D, 5, {0, 0, 0, 0, 0}});
  const auto stripped = strip_loops(spec);
  EXPECT_EQ(stripped.base, spec);
  EXPECT_EQ(stripped.loop_counts, std::vector<std::size_t>(5, 0));
}

TEST(StripLoops, QnmBaseIsTwoCycle) {
  const auto stripped = strip_loops(generate_family({FamilyKind::Qnm, 0, {3, 4}}));
  EXPECT_EQ(stripped.loop_counts, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(stripped.base.quiver().arrow_count(1, 2), 1u);
  EXPECT_EQ(stripped.base.quiver().arrow_count(2, 1), 1u);
  EXPECT_EQ(stripped.base.arrow_count(), 2u);
}

TEST(StripLoops, RemovesExactlyTheLoops) {
  for (const auto& f : sample_families()) {
    const auto spec = generate_family(f);
    const auto stripped = strip_loops(spec);
    std::size_t loops = 0;
    for (auto c : spec.loop_counts()) loops += c;
    EXPECT_EQ(stripped.base.arrow_count() + loops, spec.arrow_count());
    for (const auto& a : stripped.base.quiver().arrows()) EXPECT_FALSE(a.is_loop());
  }
}

TEST(Opposite, InvolutionAndLoopCounts) {
  for (const auto& f : sample_families()) {
    const auto spec = generate_family(f);
    EXPECT_EQ(opposite(opposite(spec)), spec);
    EXPECT_EQ(opposite(spec).loop_counts(), spec.loop_counts());
    EXPECT_EQ(opposite(spec).vertex_count(), spec.vertex_count());
  }
}

TEST(Opposite, ReversesChainAndA3Reversed) {
  const auto a3 = opposite(generate_family({FamilyKind::A, 3, {0, 0, 0}}));
  EXPECT_EQ(a3.quiver().arrow_count(2, 1), 1u);
  EXPECT_EQ(a3.quiver().arrow_count(3, 2), 1u);
  const auto rev = opposite(generate_family({FamilyKind::A3Reversed, 0, {0, 0, 0}}));
  EXPECT_EQ(rev.quiver().arrow_count(2, 1), 1u);
  EXPECT_EQ(rev.quiver().arrow_count(2, 3), 1u);
}
