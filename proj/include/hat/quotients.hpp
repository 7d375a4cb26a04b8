#pragma once

// Normal quotients (Gamma_N, G/N) of graph-group pairs.

#include <optional>
#include <string>

#include "hat/families.hpp"

namespace hat {

enum class QuotientKind { SinglePoint, SingleEdge, Cycle, Valency4, Other };
enum class CycleGroup { Cyclic, Dihedral, Other };

std::string to_string(QuotientKind k);
std::string to_string(CycleGroup c);

struct QuotientClass {
  QuotientKind kind = QuotientKind::Other;
  std::size_t m = 0;  // number of blocks
  bool oriented = false;
  std::optional<CycleGroup> group_structure;  // only for cycles

  bool degenerate() const noexcept {
    return kind == QuotientKind::SinglePoint || kind == QuotientKind::SingleEdge ||
           kind == QuotientKind::Cycle;
  }
  /// "K_1", "K_2", "C_6", "valency-4 on 16", "other on 5".
  std::string describe() const;
};

struct QuotientReport {
  std::string input_name;
  PermGroup normal_subgroup;
  BlockPartition blocks;
  OrientedGraph quotient_graph;  // oriented only when the orientation is inherited
  PermGroup kernel;
  PermGroup induced;  // G / kernel, faithful on the blocks
  QuotientClass cls;
  bool is_cover = false;

  /// The quotient as a pair (quotient_graph, induced).
  GGPair as_pair() const;
};

/// Throws NotNormal when N is not a normal subgroup of pair.group.
QuotientReport normal_quotient(const GGPair& pair, const PermGroup& n);

/// Quotient by the blocks of a partition invariant under pair.group; the
/// acting normal subgroup recorded is the kernel.
QuotientReport quotient_by_partition(const GGPair& pair, const BlockPartition& blocks);

/// Cyclic when the induced group has order m and contains no element
/// reversing the cycle; dihedral when it has order 2m and does. Throws
/// NotACycle unless the quotient is a cycle.
CycleGroup classify_cycle_group(const QuotientReport& q);

}  // namespace hat
