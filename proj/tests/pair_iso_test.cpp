#include "hat/pair_iso.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hat/error.hpp"
#include "test_support.hpp"

namespace hat {
namespace {

GGPair relabel(const GGPair& p, const Perm& f) {
  std::vector<Edge> edges;
  for (const Edge& e : p.graph.edges())
    edges.push_back({std::min(f(e.u), f(e.v)), std::max(f(e.u), f(e.v))});
  GGPair q;
  q.graph = OrientedGraph(p.graph.vertex_count(), edges);
  std::vector<Arc> arcs;
  for (const Arc& a : p.graph.arcs())
    arcs.push_back({f(a.tail), f(a.head)});
  if (!arcs.empty())
    q.graph.set_orientation(arcs);
  std::vector<Perm> gens;
  for (const Perm& g : p.group.generators())
    gens.push_back(g.conjugate_by(f));
  q.group = PermGroup(p.graph.vertex_count(), gens);
  q.name = p.name + "'";
  return q;
}

TEST(PairIsoTest, Reflexive) {
  for (const FamilySpec& s : {FamilySpec{Family::X, 3, Orientation::K1}, FamilySpec{Family::Y, 3, Orientation::K2},
                              FamilySpec{Family::Z, 5, Orientation::K3}}) {
    const GGPair p = build_pair(s);
    const auto iso = pair_iso(p, p);
    ASSERT_TRUE(iso) << s.name();
    EXPECT_TRUE(is_pair_isomorphism(p, p, *iso));
  }
}

TEST(PairIsoTest, RandomRelabellingIsFoundAndSymmetric) {
  std::mt19937 rng(7);
  for (const FamilySpec& s : {FamilySpec{Family::X, 2, Orientation::K2}, FamilySpec{Family::Y, 4, Orientation::K1},
                              FamilySpec{Family::Z, 3, Orientation::K3}}) {
    const GGPair p = build_pair(s);
    const GGPair q = relabel(p, testing::random_perm(p.graph.vertex_count(), rng));
    const auto pq = pair_iso(p, q);
    const auto qp = pair_iso(q, p);
    ASSERT_TRUE(pq && qp) << s.name();
    EXPECT_TRUE(is_pair_isomorphism(p, q, *pq));
    EXPECT_TRUE(is_pair_isomorphism(q, p, *qp));
  }
}

TEST(PairIsoTest, ReversedOrientationStillIsomorphic) {
  const GGPair p = build_pair({Family::X, 3, Orientation::K3});
  const GGPair r = with_orientation(p, reverse_arcs(p.graph.arcs()));
  const auto iso = pair_iso(p, r);
  ASSERT_TRUE(iso);
  EXPECT_TRUE(is_pair_isomorphism(p, r, *iso));
}

TEST(PairIsoTest, InvariantsSeparatePairs) {
  // Same graph, different groups.
  EXPECT_FALSE(pair_iso(build_pair({Family::X, 3, Orientation::K1}), build_pair({Family::X, 3, Orientation::K3})));
  // Different vertex counts.
  EXPECT_FALSE(pair_iso(build_pair({Family::X, 2, Orientation::K3}), build_pair({Family::Z, 3, Orientation::K3})));
  // Equal order, different graphs: G_1(3) and H_2(3) both have order 72.
  EXPECT_FALSE(pair_iso(build_pair({Family::X, 3, Orientation::K1}), build_pair({Family::Y, 3, Orientation::K2})));
}

TEST(PairIsoTest, AutomorphismGroups) {
  EXPECT_EQ(automorphism_group(build_pair({Family::X, 3, Orientation::Full}).graph).order(), 288u);
  EXPECT_EQ(automorphism_group(build_pair({Family::X, 2, Orientation::Full}).graph).order(), 384u);
  EXPECT_EQ(automorphism_group(build_pair({Family::Z, 3, Orientation::Full}).graph).order(), 72u);
  // Oriented: the orientation-preserving automorphisms contain the group.
  const GGPair p = build_pair({Family::X, 3, Orientation::K3});
  const PermGroup a = automorphism_group(p.graph, true);
  EXPECT_TRUE(p.group.is_subgroup_of(a));
}

TEST(PairIsoTest, AutomorphismCap) {
  try {
    automorphism_group(build_pair({Family::X, 3, Orientation::Full}).graph, false, 100);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CapExceeded);
  }
}

TEST(PairIsoTest, OrientationClassesOfX3) {
  const GGPair p = build_pair({Family::X, 3, Orientation::Full});
  std::vector<std::vector<Arc>> ws;
  for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3})
    ws.push_back(grid_orientation(6, k));
  ws.push_back(reverse_arcs(ws[0]));
  const auto classes = orientation_classes(p.graph, p.group, ws);
  ASSERT_EQ(classes.size(), 3u);
  EXPECT_EQ(classes[0], (std::vector<std::size_t>{0, 3}));
}

TEST(PairIsoTest, OrientationClassesRejectBadArcSets) {
  const GGPair p = build_pair({Family::X, 2, Orientation::Full});
  std::vector<std::vector<Arc>> ws{{{0, 1}}};
  try {
    orientation_classes(p.graph, p.group, ws);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidOrientation);
  }
}

}  // namespace
}  // namespace hat
