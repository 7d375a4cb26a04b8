#pragma once

// Membership in OG(4) and the alternating-cycle structure of an oriented
// four-valent graph-group pair.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hat/families.hpp"

namespace hat {

struct Og4Report {
  bool connected = false;
  bool four_valent = false;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  bool orientation_preserved = false;
  std::size_t arc_orbits = 0;
  bool in_og4 = false;
  std::string reason;  // empty when in_og4
};

/// Throws NoOrientation when the graph is unoriented. Transitivity flags are
/// orbit counts under the group's induced action on vertices, edges and arcs.
Og4Report validate_og4(const GGPair& pair);

/// Orbit counts of a group on the edges and the arcs (ordered adjacent pairs)
/// of a graph.
std::size_t edge_orbit_count(const OrientedGraph& g, const PermGroup& group);
std::size_t arc_orbit_count(const OrientedGraph& g, const PermGroup& group);

/// Vertex-, edge-transitive, and with exactly two orbits on arcs.
bool is_half_arc_transitive(const OrientedGraph& g, const PermGroup& group);

enum class AttachmentType { Loose, Antipodal, Tight, Other, Degenerate };
std::string to_string(AttachmentType t);

struct AltCycle {
  std::vector<Point> vertices;      // v0, v1, ..., v_{L-1}; edge i joins v_i and v_{i+1}
  std::vector<std::size_t> edges;   // edge indices into graph.edges()
};

struct AltCycleReport {
  std::vector<AltCycle> cycles;
  std::size_t radius = 0;
  std::size_t attachment = 0;
  AttachmentType type = AttachmentType::Degenerate;
  /// Attachment equals the radius although another label was chosen.
  bool tie = false;
  /// Sorted sizes of all nonempty pairwise intersections; one distinct value
  /// for every valid input.
  std::vector<std::size_t> intersection_sizes;
};

/// Traces alternating cycles. Throws NotInOG4 unless validate_og4 passes.
AltCycleReport alternating_cycles(const GGPair& pair);

/// Stated (radius, attachment) of the X and Y pairs for r >= 3: loose with
/// radius 2, antipodal with radius r, tight with radius 2r (X) or r (Y) for
/// k = 1, 2, 3. nullopt for other pairs.
std::optional<std::pair<std::size_t, std::size_t>> stated_alternating(const FamilySpec& spec);

/// Same tracing without the membership check; needs in- and out-degree 2
/// everywhere (NotInOG4 otherwise).
AltCycleReport trace_alternating_cycles(const OrientedGraph& g);

}  // namespace hat
