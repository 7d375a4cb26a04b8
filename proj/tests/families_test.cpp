#include "hat/families.hpp"

#include <gtest/gtest.h>

#include "hat/error.hpp"
#include "test_support.hpp"

namespace hat {
namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::BadParameter;
}

TEST(FamiliesTest, GroupOrders) {
  for (int r = 2; r <= 5; ++r) {
    const std::size_t rr = static_cast<std::size_t>(r * r);
    EXPECT_EQ(build_pair({Family::X, r, Orientation::Full}).group.order(), 32 * rr);
    EXPECT_EQ(build_pair({Family::X, r, Orientation::K1}).group.order(), 8 * rr);
    EXPECT_EQ(build_pair({Family::X, r, Orientation::K2}).group.order(), 16 * rr);
    EXPECT_EQ(build_pair({Family::X, r, Orientation::K3}).group.order(), 8 * rr);
  }
  for (int s : {3, 5, 7}) {
    const auto z = build_pair({Family::Z, s, Orientation::K3});
    EXPECT_EQ(z.group.order(), static_cast<std::size_t>(2 * s * s));
    EXPECT_EQ(z.graph.vertex_count(), static_cast<std::size_t>(s * s));
  }
}

TEST(FamiliesTest, GroupsPreserveTheirOrientation) {
  for (int r = 2; r <= 4; ++r)
    for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3}) {
      const auto p = build_pair({Family::X, r, k});
      ASSERT_TRUE(p.graph.has_orientation());
      for (const auto& g : p.group.generators())
        EXPECT_TRUE(preserves_orientation(p.graph, g)) << p.name;
      EXPECT_TRUE(is_connected(p.graph));
      EXPECT_TRUE(is_regular_of_valency(p.graph, 4));
      EXPECT_TRUE(action_profile(p.group).transitive);
    }
}

TEST(FamiliesTest, VertexStabilizers) {
  const auto g = build_generators(6);
  const auto s1 = stabilizer(build_pair({Family::X, 3, Orientation::K1}).group, 0);
  EXPECT_EQ(s1, PermGroup(36, {g.tau}));
  const auto s2 = stabilizer(build_pair({Family::X, 3, Orientation::K2}).group, 0);
  EXPECT_EQ(s2, PermGroup(36, {g.sigma1, g.sigma2}));
  const auto s3 = stabilizer(build_pair({Family::X, 3, Orientation::K3}).group, 0);
  EXPECT_EQ(s3.order(), 2u);
}

TEST(FamiliesTest, FullGroupIsTheWholeGridGroupForSmallR) {
  EXPECT_EQ(build_pair({Family::X, 2, Orientation::Full}).group.order(), 128u);
  EXPECT_EQ(build_pair({Family::X, 3, Orientation::K1}).group.order(), 72u);
}

TEST(FamiliesTest, YPairs) {
  for (int r = 2; r <= 5; ++r)
    for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3, Orientation::Full}) {
      if (k == Orientation::K1 && r % 2 != 0)
        continue;
      const auto x = build_pair({Family::X, r, k});
      const auto y = build_pair({Family::Y, r, k});
      EXPECT_EQ(y.graph.vertex_count(), static_cast<std::size_t>(2 * r * r));
      EXPECT_EQ(y.group.order() * 2, x.group.order()) << y.name;
      EXPECT_EQ(y.cover_map.size(), x.graph.vertex_count());
      EXPECT_EQ(y.graph.has_orientation(), k != Orientation::Full);
      EXPECT_TRUE(is_regular_of_valency(y.graph, 4));
    }
}

TEST(FamiliesTest, YBlocksPairAntipodes) {
  const auto y = build_pair({Family::Y, 3, Orientation::K3});
  // (0,0) and (3,3) share a block; vertex 0 of Y carries both labels.
  EXPECT_EQ(y.cover_map[0], y.cover_map[3 * 6 + 3]);
  EXPECT_EQ(y.graph.labels()[0], (std::vector<Coordinate>{{0, 0}, {3, 3}}));
}

TEST(FamiliesTest, YTwoIsK44) {
  const auto y = build_pair({Family::Y, 2, Orientation::K3});
  EXPECT_EQ(y.graph.vertex_count(), 8u);
  EXPECT_EQ(y.graph.edge_count(), 16u);
  // Bipartite by colour class and complete across it.
  std::vector<int> side(8, -1);
  side[0] = 0;
  for (int pass = 0; pass < 8; ++pass)
    for (const auto& e : y.graph.edges()) {
      if (side[e.u] >= 0 && side[e.v] < 0)
        side[e.v] = 1 - side[e.u];
      if (side[e.v] >= 0 && side[e.u] < 0)
        side[e.u] = 1 - side[e.v];
    }
  for (const auto& e : y.graph.edges())
    EXPECT_NE(side[e.u], side[e.v]);
}

TEST(FamiliesTest, DegenerateRadiusOne) {
  const auto x = build_pair({Family::X, 1, Orientation::K3});
  EXPECT_TRUE(x.graph.degenerate());
  EXPECT_EQ(x.graph.vertex_count(), 4u);
  EXPECT_EQ(x.graph.edge_count(), 4u);
  const auto y = build_pair({Family::Y, 1, Orientation::K3});
  EXPECT_EQ(y.graph.vertex_count(), 2u);
  EXPECT_EQ(y.graph.edge_count(), 1u);
}

TEST(FamiliesTest, InvalidSpecs) {
  EXPECT_EQ(code_of([] { build_pair({Family::Y, 3, Orientation::K1}); }), Errc::BadParameter);
  EXPECT_EQ(code_of([] { build_pair({Family::Z, 4, Orientation::K3}); }), Errc::BadParameter);
  EXPECT_EQ(code_of([] { build_pair({Family::Z, 5, Orientation::K2}); }), Errc::BadParameter);
  EXPECT_EQ(code_of([] { build_pair({Family::X, 0, Orientation::K2}); }), Errc::BadParameter);
  EXPECT_EQ(code_of([] { grid_orientation(5, Orientation::K1); }), Errc::BadParameter);
}

TEST(FamiliesTest, NamedSubgroupOrders) {
  const auto x = build_pair({Family::X, 3, Orientation::Full});
  EXPECT_EQ(named_subgroup(x, {SubgroupKind::N, 2}).order(), 9u);
  EXPECT_EQ(named_subgroup(x, {SubgroupKind::N, 3}).order(), 4u);
  EXPECT_EQ(named_subgroup(x, {SubgroupKind::M, 3}).order(), 2u);
  EXPECT_EQ(named_subgroup(x, {SubgroupKind::M, 1}).order(), 18u);
  EXPECT_EQ(named_subgroup(x, {SubgroupKind::J}).order(), 6u);
  EXPECT_EQ(named_subgroup(x, {SubgroupKind::K}).order(), 12u);
  EXPECT_EQ(named_subgroup(x, {SubgroupKind::N2Plus}).order(), 36u);
  EXPECT_EQ(code_of([&] { named_subgroup(x, {SubgroupKind::N, 4}); }), Errc::BadParameter);
  EXPECT_EQ(code_of([&] { named_subgroup(x, {SubgroupKind::N, 2, true}); }), Errc::BadParameter);
  const auto x3 = build_pair({Family::X, 3, Orientation::K3});
  EXPECT_EQ(code_of([&] { named_subgroup(x3, {SubgroupKind::N2Plus}); }), Errc::NotContained);
}

TEST(FamiliesTest, BarredNEqualsBarredMWhenCofactorOdd) {
  for (int r = 2; r <= 6; ++r) {
    const auto y = build_pair({Family::Y, r, Orientation::Full});
    for (int a = 2; a <= 2 * r; a += 2) {
      if ((2 * r) % a != 0 || ((2 * r) / a) % 2 == 0)
        continue;
      EXPECT_EQ(named_subgroup(y, {SubgroupKind::N, a, true}),
                named_subgroup(y, {SubgroupKind::M, a / 2, true}))
          << "r=" << r << " a=" << a;
    }
  }
}

TEST(FamiliesTest, CentralizerOfNTwoInGFive) {
  const auto x = build_pair({Family::X, 5, Orientation::Full});
  const auto n2 = named_subgroup(x, {SubgroupKind::N, 2});
  std::size_t oracle = 0;
  for (const auto& g : x.group.elements())
    if (std::all_of(n2.generators().begin(), n2.generators().end(),
                    [&](const Perm& h) { return g * h == h * g; }))
      ++oracle;
  EXPECT_EQ(centralizer(x.group, n2).order(), oracle);
  EXPECT_EQ(oracle, 100u);
}

}  // namespace
}  // namespace hat
