#include "hat/og4.hpp"

#include <algorithm>
#include <numeric>

#include "hat/error.hpp"

namespace hat {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      n += find(i) == i;
    return n;
  }
};

// Arc index: 2*e for edges()[e] traversed u->v, 2*e+1 for v->u.
std::size_t arc_index(const OrientedGraph& g, Point a, Point b) {
  const auto e = g.edge_index(a, b);
  if (!e)
    throw Error(Errc::PartitionNotInvariant, "group element does not preserve adjacency");
  return 2 * *e + (a < b ? 0 : 1);
}

}  // namespace

std::string to_string(AttachmentType t) {
  switch (t) {
    case AttachmentType::Loose: return "loose";
    case AttachmentType::Antipodal: return "antipodal";
    case AttachmentType::Tight: return "tight";
    case AttachmentType::Other: return "other";
    case AttachmentType::Degenerate: return "degenerate";
  }
  return "?";
}

std::size_t edge_orbit_count(const OrientedGraph& g, const PermGroup& group) {
  UnionFind uf(g.edge_count());
  for (const Perm& p : group.generators())
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      uf.unite(e, arc_index(g, p(g.edges()[e].u), p(g.edges()[e].v)) / 2);
  return uf.classes();
}

std::size_t arc_orbit_count(const OrientedGraph& g, const PermGroup& group) {
  UnionFind uf(2 * g.edge_count());
  for (const Perm& p : group.generators())
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edges()[e];
      uf.unite(2 * e, arc_index(g, p(u), p(v)));
      uf.unite(2 * e + 1, arc_index(g, p(v), p(u)));
    }
  return uf.classes();
}

bool is_half_arc_transitive(const OrientedGraph& g, const PermGroup& group) {
  return action_profile(group).transitive && edge_orbit_count(g, group) == 1 &&
         arc_orbit_count(g, group) == 2;
}

Og4Report validate_og4(const GGPair& pair) {
  const OrientedGraph& g = pair.graph;
  if (!g.has_orientation())
    throw Error(Errc::NoOrientation, pair.name + " carries no orientation");
  Og4Report r;
  r.connected = is_connected(g);
  r.four_valent = is_regular_of_valency(g, 4);
  const bool edges_kept = std::all_of(pair.group.generators().begin(), pair.group.generators().end(),
                                      [&](const Perm& p) { return preserves_edges(g, p); });
  if (edges_kept) {
    r.vertex_transitive = action_profile(pair.group).transitive;
    r.edge_transitive = edge_orbit_count(g, pair.group) == 1;
    r.arc_orbits = arc_orbit_count(g, pair.group);
    r.arc_transitive = r.arc_orbits == 1;
    r.orientation_preserved =
        std::all_of(pair.group.generators().begin(), pair.group.generators().end(),
                    [&](const Perm& p) { return preserves_orientation(g, p); });
  }
  if (g.vertex_count() < 5)
    r.reason = "fewer than 5 vertices";
  else if (!edges_kept)
    r.reason = "group does not act on the graph";
  else if (!r.connected)
    r.reason = "disconnected";
  else if (!r.four_valent)
    r.reason = "not 4-valent";
  else if (!r.vertex_transitive)
    r.reason = "not vertex-transitive";
  else if (!r.edge_transitive)
    r.reason = "not edge-transitive";
  else if (r.arc_transitive)
    r.reason = "arc-transitive";
  else if (!r.orientation_preserved)
    r.reason = "orientation not preserved";
  r.in_og4 = r.reason.empty();
  return r;
}

AltCycleReport trace_alternating_cycles(const OrientedGraph& g) {
  if (!g.has_orientation())
    throw Error(Errc::NoOrientation, "graph carries no orientation");
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Point>> outs(n), ins(n);
  for (Point v = 0; v < n; ++v) {
    outs[v] = g.out_neighbors(v);
    ins[v] = g.in_neighbors(v);
    if (outs[v].size() != 2 || ins[v].size() != 2)
      throw Error(Errc::NotInOG4, "alternating cycles need in- and out-degree 2");
  }
  auto other = [](const std::vector<Point>& two, Point x) { return two[0] == x ? two[1] : two[0]; };

  AltCycleReport rep;
  std::vector<bool> used(g.edge_count(), false);
  for (std::size_t start = 0; start < g.edge_count(); ++start) {
    if (used[start])
      continue;
    AltCycle cyc;
    // Walk along the arc tail -> head; at the head we arrived on an in-arc.
    const Arc first = g.is_arc(g.edges()[start].u, g.edges()[start].v)
                          ? Arc{g.edges()[start].u, g.edges()[start].v}
                          : Arc{g.edges()[start].v, g.edges()[start].u};
    Point prev = first.tail, cur = first.head;
    bool entered_on_in_arc = true;
    cyc.vertices.push_back(prev);
    cyc.edges.push_back(start);
    used[start] = true;
    for (;;) {
      const Point next = entered_on_in_arc ? other(ins[cur], prev) : other(outs[cur], prev);
      const std::size_t e = *g.edge_index(cur, next);
      if (e == start)
        break;
      if (used[e])
        throw Error(Errc::NotInOG4, "alternating walk revisits an edge");
      used[e] = true;
      cyc.vertices.push_back(cur);
      cyc.edges.push_back(e);
      prev = cur;
      cur = next;
      entered_on_in_arc = !entered_on_in_arc;
    }
    rep.cycles.push_back(std::move(cyc));
  }

  const std::size_t len = rep.cycles.front().edges.size();
  for (const auto& c : rep.cycles)
    if (c.edges.size() != len)
      throw Error(Errc::NotInOG4, "alternating cycles differ in length");
  rep.radius = len / 2;

  std::vector<std::vector<Point>> vsets;
  for (const auto& c : rep.cycles) {
    std::vector<Point> s = c.vertices;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    vsets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < vsets.size(); ++i)
    for (std::size_t j = i + 1; j < vsets.size(); ++j) {
      std::vector<Point> common;
      std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                            std::back_inserter(common));
      if (!common.empty())
        rep.intersection_sizes.push_back(common.size());
    }
  std::sort(rep.intersection_sizes.begin(), rep.intersection_sizes.end());

  if (rep.intersection_sizes.empty()) {
    rep.type = AttachmentType::Degenerate;
    return rep;
  }
  if (rep.intersection_sizes.front() != rep.intersection_sizes.back()) {
    rep.type = AttachmentType::Other;
    return rep;
  }
  rep.attachment = rep.intersection_sizes.front();
  if (rep.attachment == 1)
    rep.type = AttachmentType::Loose;
  else if (rep.attachment == 2)
    rep.type = AttachmentType::Antipodal;
  else if (rep.attachment == rep.radius)
    rep.type = AttachmentType::Tight;
  else
    rep.type = AttachmentType::Other;
  rep.tie = rep.attachment == rep.radius && rep.type != AttachmentType::Tight;
  return rep;
}

AltCycleReport alternating_cycles(const GGPair& pair) {
  const auto og4 = validate_og4(pair);
  if (!og4.in_og4)
    throw Error(Errc::NotInOG4, pair.name + ": " + og4.reason);
  return trace_alternating_cycles(pair.graph);
}

std::optional<std::pair<std::size_t, std::size_t>> stated_alternating(const FamilySpec& spec) {
  const auto r = static_cast<std::size_t>(spec.parameter);
  if (spec.family == Family::Z || r < 3)
    return std::nullopt;
  switch (spec.k) {
    case Orientation::K1: return std::pair<std::size_t, std::size_t>{2, 1};
    case Orientation::K2: return std::pair<std::size_t, std::size_t>{r, 2};
    case Orientation::K3: {
      const std::size_t radius = spec.family == Family::X ? 2 * r : r;
      return std::pair<std::size_t, std::size_t>{radius, radius};
    }
    case Orientation::Full: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace hat
