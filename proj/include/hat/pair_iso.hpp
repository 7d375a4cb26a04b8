#pragma once

// Isomorphisms of oriented graphs and of graph-group pairs.
//
// A pair isomorphism (G1 on Gamma1) -> (G2 on Gamma2) is a graph isomorphism
// f with f^-1 G1 f = G2; the group map is conjugation by f. Because a group
// fixes its invariant orientation only up to reversal, f may carry the
// orientation of Gamma1 either onto that of Gamma2 or onto its reverse.

#include <functional>
#include <optional>
#include <vector>

#include "hat/families.hpp"

namespace hat {

using VertexMap = std::vector<Point>;

/// Calls `visit` on every isomorphism a -> b (vertex i of a maps to map[i]).
/// With `use_orientation` arcs must map to arcs; both graphs must then be
/// oriented. When `first_image` is set, the first vertex in the search order
/// (vertex 0 of a) is sent there. Stops early when `visit` returns false.
void for_each_isomorphism(const OrientedGraph& a, const OrientedGraph& b, bool use_orientation,
                          std::optional<Point> first_image,
                          const std::function<bool(const VertexMap&)>& visit);

/// Some isomorphism preserving adjacency and, when both graphs are oriented,
/// the orientation. Deterministic for fixed inputs.
std::optional<VertexMap> oriented_graph_iso(const OrientedGraph& a, const OrientedGraph& b);

/// The full automorphism group by exhaustive search. Ignores the
/// orientation unless `use_orientation`. Throws CapExceeded past `cap`.
PermGroup automorphism_group(const OrientedGraph& g, bool use_orientation = false,
                             std::size_t cap = kDefaultElementCap);

struct PairIsomorphism {
  VertexMap vertex_map;
  /// The orientation of the first graph lands on the reverse of the second.
  bool reverses_orientation = false;
};

/// A vertex map as a permutation (requires equal vertex counts).
Perm as_perm(const VertexMap& f);

std::optional<PairIsomorphism> pair_iso(const GGPair& p1, const GGPair& p2);

/// Checks the defining identity f(x^g) = f(x)^(g^f) and that f^-1 G1 f = G2.
bool is_pair_isomorphism(const GGPair& p1, const GGPair& p2, const PairIsomorphism& iso);

/// Groups orientations into classes under w ~ w' iff w^g = w' or
/// w^g = reverse(w') for some g in aut. Each class lists indices into
/// `orientations`, classes ordered by least index. Throws InvalidOrientation
/// for arc sets that are not one arc per edge of `graph`.
std::vector<std::vector<std::size_t>> orientation_classes(
    const OrientedGraph& graph, const PermGroup& aut,
    const std::vector<std::vector<Arc>>& orientations);

/// Least image of the arc set under aut and reversal; equal keys mean the
/// same class.
std::vector<Arc> canonical_orientation(const PermGroup& aut, const std::vector<Arc>& arcs);

}  // namespace hat
