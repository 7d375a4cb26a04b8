#include "hat/quotients.hpp"

#include "hat/error.hpp"

namespace hat {

namespace {

// Vertices of a connected 2-regular graph in cycle order starting at 0.
std::vector<Point> cycle_order(const OrientedGraph& g) {
  std::vector<Point> order{0};
  Point prev = 0, cur = g.neighbors(0)[0];
  while (cur != 0) {
    order.push_back(cur);
    const auto nb = g.neighbors(cur);
    const Point next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

std::string to_string(QuotientKind k) {
  switch (k) {
    case QuotientKind::SinglePoint: return "K1";
    case QuotientKind::SingleEdge: return "K2";
    case QuotientKind::Cycle: return "cycle";
    case QuotientKind::Valency4: return "valency4";
    case QuotientKind::Other: return "other";
  }
  return "?";
}

std::string to_string(CycleGroup c) {
  switch (c) {
    case CycleGroup::Cyclic: return "cyclic";
    case CycleGroup::Dihedral: return "dihedral";
    case CycleGroup::Other: return "other";
  }
  return "?";
}

std::string QuotientClass::describe() const {
  switch (kind) {
    case QuotientKind::SinglePoint: return "K_1";
    case QuotientKind::SingleEdge: return "K_2";
    case QuotientKind::Cycle: return "C_" + std::to_string(m);
    case QuotientKind::Valency4: return "valency-4 on " + std::to_string(m);
    case QuotientKind::Other: return "other on " + std::to_string(m);
  }
  return "?";
}

GGPair QuotientReport::as_pair() const {
  GGPair p;
  p.graph = quotient_graph;
  p.group = induced;
  p.name = input_name + "/N";
  return p;
}

QuotientReport quotient_by_partition(const GGPair& pair, const BlockPartition& blocks) {
  QuotientReport q;
  q.input_name = pair.name;
  q.blocks = blocks;
  auto action = kernel_and_quotient_action(pair.group, blocks);
  q.kernel = action.kernel;
  q.normal_subgroup = action.kernel;
  q.induced = action.induced;
  BlockGraph bg = block_graph(pair.graph, blocks);
  q.quotient_graph = std::move(bg.graph);
  q.is_cover = bg.cover;

  const OrientedGraph& g = q.quotient_graph;
  q.cls.m = g.vertex_count();
  q.cls.oriented = g.has_orientation();
  if (g.vertex_count() == 1) {
    q.cls.kind = QuotientKind::SinglePoint;
  } else if (g.vertex_count() == 2 && g.edge_count() == 1) {
    q.cls.kind = QuotientKind::SingleEdge;
  } else if (g.vertex_count() >= 3 && is_connected(g) && is_regular_of_valency(g, 2)) {
    q.cls.kind = QuotientKind::Cycle;
  } else if (is_regular_of_valency(g, 4)) {
    q.cls.kind = QuotientKind::Valency4;
  } else {
    q.cls.kind = QuotientKind::Other;
  }
  if (q.cls.kind == QuotientKind::Cycle)
    q.cls.group_structure = classify_cycle_group(q);
  return q;
}

QuotientReport normal_quotient(const GGPair& pair, const PermGroup& n) {
  bool normal = false;
  try {
    normal = is_normal(n, pair.group);
  } catch (const Error& e) {
    if (e.code() != Errc::NotASubgroup)
      throw;
  }
  if (!normal)
    throw Error(Errc::NotNormal, "subgroup is not normal in the group of " + pair.name);
  QuotientReport q = quotient_by_partition(pair, orbits(n));
  q.normal_subgroup = n;
  return q;
}

CycleGroup classify_cycle_group(const QuotientReport& q) {
  if (q.cls.kind != QuotientKind::Cycle)
    throw Error(Errc::NotACycle, "quotient is " + q.cls.describe());
  const auto order = cycle_order(q.quotient_graph);
  const std::size_t m = order.size();
  std::vector<std::size_t> pos(m);
  for (std::size_t i = 0; i < m; ++i)
    pos[order[i]] = i;
  bool reflection = false;
  for (const Perm& g : q.induced.elements())
    if ((pos[g(order[1])] + 1) % m == pos[g(order[0])]) {
      reflection = true;
      break;
    }
  if (q.induced.order() == m && !reflection)
    return CycleGroup::Cyclic;
  if (q.induced.order() == 2 * m && reflection)
    return CycleGroup::Dihedral;
  return CycleGroup::Other;
}

}  // namespace hat
