#include <gtest/gtest.h>

#include <set>

#include "fpd/dynkin.hpp"
#include "fpd/error.hpp"
#include "fpd/family.hpp"

using namespace fpd;

namespace {

// Positive roots as the orbit of the simple roots under simple reflections.
std::set<RootVector> reflection_closure(const Diagram& d) {
  const std::size_t n = d.rank;
  std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) cartan[i][i] = 2;
  for (const auto& [a, b] : diagram_edges(d)) cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1;

  std::set<RootVector> roots;
  std::vector<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector r(n, 0);
    r[i] = 1;
    roots.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const RootVector r = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += cartan[i][j] * r[j];
      RootVector s = r;
      s[i] -= pairing;
      if (std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; }) && roots.insert(s).second)
        queue.push_back(s);
    }
  }
  return roots;
}

BoundAlgebraSpec quiver(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < edges.size(); ++k)
    arrows.push_back({"e" + std::to_string(k), edges[k].first, edges[k].second});
  return BoundAlgebraSpec(Quiver(n, std::move(arrows)));
}

}  // namespace

TEST(PositiveRoots, A2) {
  EXPECT_EQ(positive_roots({DynkinType::A, 2}),
            (std::vector<RootVector>{{0, 1}, {1, 0}, {1, 1}}));
}

TEST(PositiveRoots, Counts) {
  for (std::size_t n = 1; n <= 8; ++n)
    EXPECT_EQ(positive_roots({DynkinType::A, n}).size(), n * (n + 1) / 2);
  for (std::size_t n = 4; n <= 9; ++n)
    EXPECT_EQ(positive_roots({DynkinType::D, n}).size(), n * (n - 1));
  EXPECT_EQ(positive_roots({DynkinType::E, 6}).size(), 36u);
  EXPECT_EQ(positive_roots({DynkinType::E, 7}).size(), 63u);
  EXPECT_EQ(positive_roots({DynkinType::E, 8}).size(), 120u);
}

TEST(PositiveRoots, MatchReflectionClosure) {
  std::vector<Diagram> diagrams;
  for (std::size_t n = 1; n <= 6; ++n) diagrams.push_back({DynkinType::A, n});
  for (std::size_t n = 4; n <= 8; ++n) diagrams.push_back({DynkinType::D, n});
  for (std::size_t n = 6; n <= 8; ++n) diagrams.push_back({DynkinType::E, n});
  for (const auto& d : diagrams) {
    const auto roots = positive_roots(d);
    const std::set<RootVector> listed(roots.begin(), roots.end());
    EXPECT_EQ(listed.size(), roots.size()) << to_string(d);
    EXPECT_EQ(listed, reflection_closure(d)) << to_string(d);
  }
}

TEST(PositiveRoots, HighestRootsOfE) {
  EXPECT_EQ(positive_roots({DynkinType::E, 6}).back(), (RootVector{1, 2, 2, 3, 2, 1}));
  EXPECT_EQ(positive_roots({DynkinType::E, 7}).back(), (RootVector{2, 2, 3, 4, 3, 2, 1}));
  EXPECT_EQ(positive_roots({DynkinType::E, 8}).back(), (RootVector{2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST(PositiveRoots, InvalidDiagram) {
  EXPECT_THROW(positive_roots({DynkinType::E, 5}), ValidationError);
  EXPECT_THROW(positive_roots({DynkinType::D, 3}), ValidationError);
  EXPECT_THROW(positive_roots({DynkinType::A, 0}), ValidationError);
}

TEST(Classify, Families) {
  const auto a = classify_components(generate_family({FamilyKind::A, 4, {1, 0, 0, 2}}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].diagram, (Diagram{DynkinType::A, 4}));

  for (std::size_t n = 4; n <= 7; ++n) {
    const auto spec = generate_family({FamilyKind::D, n, std::vector<std::size_t>(n, 1)});
    const auto c = classify_components(spec);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].kind, ComponentKind::Dynkin);
    EXPECT_EQ(c[0].diagram, (Diagram{DynkinType::D, n}));
    EXPECT_TRUE(has_reference_orientation(spec, c[0]));
    EXPECT_TRUE(has_reference_orientation(opposite(spec), classify_components(opposite(spec))[0]));
  }
  for (std::size_t n = 6; n <= 8; ++n) {
    const auto spec = generate_family({FamilyKind::E, n, std::vector<std::size_t>(n, 0)});
    const auto c = classify_components(spec);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].diagram, (Diagram{DynkinType::E, n}));
    EXPECT_TRUE(has_reference_orientation(spec, c[0]));
    // The family labels are the standard ones.
    std::vector<Vertex> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = i + 1;
    EXPECT_NE(std::find(c[0].labelings.begin(), c[0].labelings.end(), identity),
              c[0].labelings.end());
  }
}

TEST(Classify, CyclesAndWildComponents) {
  const auto q = classify_components(generate_family({FamilyKind::Qnm, 0, {2, 3}}));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].kind, ComponentKind::TwoCycle);

  EXPECT_EQ(classify_components(quiver(2, {{1, 2}, {1, 2}}))[0].kind, ComponentKind::Other);
  EXPECT_EQ(classify_components(quiver(3, {{1, 2}, {2, 3}, {3, 1}}))[0].kind,
            ComponentKind::Other);
  EXPECT_EQ(classify_components(quiver(5, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}))[0].kind,
            ComponentKind::Other);
}

TEST(Classify, DisconnectedAndRelabelled) {
  const auto c = classify_components(quiver(5, {{4, 2}, {5, 3}}));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].vertices, std::vector<Vertex>{1});
  EXPECT_EQ(c[1].vertices, (std::vector<Vertex>{2, 4}));
  EXPECT_EQ(c[2].diagram, (Diagram{DynkinType::A, 2}));

  // E6 with scrambled vertex numbers.
  const auto e6 = quiver(6, {{6, 5}, {5, 1}, {1, 2}, {2, 3}, {1, 4}});
  const auto ce = classify_components(e6);
  ASSERT_EQ(ce.size(), 1u);
  EXPECT_EQ(ce[0].diagram, (Diagram{DynkinType::E, 6}));
  EXPECT_EQ(ce[0].labelings.size(), 2u);
  EXPECT_TRUE(has_reference_orientation(e6, ce[0]));
}

TEST(ReferenceOrientation, OtherOrientationsOfD) {
  // Centre 2 as a sink: not the reference orientation or its reverse.
  const auto sink = quiver(4, {{1, 2}, {3, 2}, {4, 2}});
  EXPECT_FALSE(has_reference_orientation(sink, classify_components(sink)[0]));
  // One arm reversed relative to the others matches up to relabelling.
  const auto mixed = quiver(4, {{1, 2}, {3, 2}, {2, 4}});
  EXPECT_TRUE(has_reference_orientation(mixed, classify_components(mixed)[0]));
  const auto d5 = quiver(5, {{2, 1}, {2, 3}, {3, 4}, {3, 5}});
  EXPECT_FALSE(has_reference_orientation(d5, classify_components(d5)[0]));
}
