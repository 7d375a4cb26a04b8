#include "hat/og4.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "hat/error.hpp"
#include "test_support.hpp"

namespace hat {
namespace {

std::vector<FamilySpec> small_pairs(int max_r) {
  std::vector<FamilySpec> out;
  for (int r = 2; r <= max_r; ++r)
    for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3}) {
      out.push_back({Family::X, r, k});
      if (k != Orientation::K1 || r % 2 == 0)
        out.push_back({Family::Y, r, k});
    }
  for (int s : {3, 5, 7})
    out.push_back({Family::Z, s, Orientation::K3});
  return out;
}

TEST(Og4Test, FamilyPairsAreInOg4) {
  for (const auto& spec : small_pairs(5)) {
    const Og4Report r = validate_og4(build_pair(spec));
    EXPECT_TRUE(r.in_og4) << spec.name() << ": " << r.reason;
    EXPECT_EQ(r.arc_orbits, 2u) << spec.name();
  }
}

TEST(Og4Test, FullGroupIsArcTransitive) {
  auto p = build_pair({Family::X, 3, Orientation::Full});
  EXPECT_EQ(arc_orbit_count(p.graph, p.group), 1u);
  EXPECT_FALSE(is_half_arc_transitive(p.graph, p.group));
  try {
    validate_og4(p);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoOrientation);
  }
  // The full group on the oriented graph does not keep the orientation.
  const auto oriented = with_orientation(p, grid_orientation(6, Orientation::K3));
  const Og4Report r = validate_og4(oriented);
  EXPECT_FALSE(r.in_og4);
  EXPECT_TRUE(r.arc_transitive);
  EXPECT_FALSE(r.orientation_preserved);
}

TEST(Og4Test, DegenerateParameterHasNoOrientation) {
  const auto x1 = build_pair({Family::X, 1, Orientation::K3});
  EXPECT_TRUE(x1.graph.degenerate());
  EXPECT_FALSE(x1.graph.has_orientation());
  EXPECT_EQ(x1.graph.vertex_count(), 4u);
}

TEST(Og4Test, TracerMatchesEdgePairingOracle) {
  for (const auto& spec : small_pairs(5)) {
    const GGPair p = build_pair(spec);
    const AltCycleReport rep = alternating_cycles(p);
    const auto naive = testing::naive_alternating_cycles(p.graph.vertex_count(), p.graph.arcs());
    ASSERT_EQ(rep.cycles.size(), naive.lengths.size()) << spec.name();
    for (std::size_t len : naive.lengths)
      EXPECT_EQ(len, 2 * rep.radius) << spec.name();
    const auto sizes = testing::naive_attachment_sizes(naive);
    ASSERT_EQ(sizes.size(), 1u) << spec.name();
    EXPECT_EQ(*sizes.begin(), rep.attachment) << spec.name();
  }
}

TEST(Og4Test, CyclesPartitionTheEdges) {
  for (const auto& spec : small_pairs(4)) {
    const GGPair p = build_pair(spec);
    std::vector<int> used(p.graph.edge_count(), 0);
    for (const auto& c : alternating_cycles(p).cycles) {
      EXPECT_EQ(c.vertices.size(), c.edges.size());
      for (auto e : c.edges)
        ++used[e];
    }
    for (int u : used)
      EXPECT_EQ(u, 1) << spec.name();
  }
}

// Values from an independent script over the raw arc sets.
TEST(Og4Test, RadiusAndAttachmentTable) {
  for (int r = 3; r <= 6; ++r) {
    const std::size_t R = static_cast<std::size_t>(r);
    auto ra = [](const FamilySpec& s) {
      const auto a = alternating_cycles(build_pair(s));
      return std::pair{a.radius, a.attachment};
    };
    EXPECT_EQ(ra({Family::X, r, Orientation::K1}), (std::pair<std::size_t, std::size_t>{2, 1}));
    EXPECT_EQ(ra({Family::X, r, Orientation::K2}), (std::pair<std::size_t, std::size_t>{R, 1}));
    EXPECT_EQ(ra({Family::X, r, Orientation::K3}), (std::pair<std::size_t, std::size_t>{2 * R, 2 * R}));
    if (r % 2 == 0)
      EXPECT_EQ(ra({Family::Y, r, Orientation::K1}), (std::pair<std::size_t, std::size_t>{2, 1}));
    EXPECT_EQ(ra({Family::Y, r, Orientation::K2}), (std::pair<std::size_t, std::size_t>{R, 2}));
    EXPECT_EQ(ra({Family::Y, r, Orientation::K3}), (std::pair<std::size_t, std::size_t>{R, R}));
  }
  for (int s : {3, 5, 7, 9}) {
    const auto a = alternating_cycles(build_pair({Family::Z, s, Orientation::K3}));
    EXPECT_EQ(a.radius, static_cast<std::size_t>(s));
    EXPECT_EQ(a.type, AttachmentType::Tight);
  }
}

TEST(Og4Test, AttachmentTypes) {
  EXPECT_EQ(alternating_cycles(build_pair({Family::X, 3, Orientation::K1})).type, AttachmentType::Loose);
  EXPECT_EQ(alternating_cycles(build_pair({Family::Y, 3, Orientation::K2})).type, AttachmentType::Antipodal);
  EXPECT_EQ(alternating_cycles(build_pair({Family::X, 3, Orientation::K3})).type, AttachmentType::Tight);
  for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3}) {
    const auto a = alternating_cycles(build_pair({Family::Y, 2, k}));
    EXPECT_EQ(a.radius, 2u);
    EXPECT_EQ(a.attachment, 2u);
    EXPECT_EQ(a.type, AttachmentType::Antipodal);
    EXPECT_TRUE(a.tie);
  }
}

TEST(Og4Test, AttachmentDividesTwiceRadius) {
  for (const auto& spec : small_pairs(6)) {
    const auto a = alternating_cycles(build_pair(spec));
    EXPECT_EQ((2 * a.radius) % a.attachment, 0u) << spec.name();
  }
}

TEST(Og4Test, ReversalInvariance) {
  for (const auto& spec : small_pairs(5)) {
    const GGPair p = build_pair(spec);
    const auto a = alternating_cycles(p);
    const auto b = alternating_cycles(with_orientation(p, reverse_arcs(p.graph.arcs())));
    EXPECT_EQ(a.radius, b.radius) << spec.name();
    EXPECT_EQ(a.attachment, b.attachment) << spec.name();
    EXPECT_EQ(a.type, b.type) << spec.name();
  }
}

TEST(Og4Test, TracerNeedsInAndOutDegreeTwo) {
  // Directed 4-cycle on C_4: in- and out-degree 1.
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  OrientedGraph g(4, e);
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  g.set_orientation(arcs);
  try {
    trace_alternating_cycles(g);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::NotInOG4);
  }
}

TEST(Og4Test, StatedValues) {
  EXPECT_EQ(stated_alternating({Family::X, 4, Orientation::K3}), (std::pair<std::size_t, std::size_t>{8, 8}));
  EXPECT_EQ(stated_alternating({Family::Y, 4, Orientation::K3}), (std::pair<std::size_t, std::size_t>{4, 4}));
  EXPECT_FALSE(stated_alternating({Family::X, 2, Orientation::K1}));
  EXPECT_FALSE(stated_alternating({Family::Z, 5, Orientation::K3}));
}

}  // namespace
}  // namespace hat
