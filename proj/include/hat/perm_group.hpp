#pragma once

/**
 * @file perm_group.hpp
 * @brief Finite permutation groups with an eagerly enumerated element set.
 *
 * All algorithms here are exhaustive. Groups in this project have at most a
 * few thousand elements on at most a few hundred points, which keeps every
 * scan cheap and lets the same code double as an oracle.
 */

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hat/perm.hpp"

namespace hat {

inline constexpr std::size_t kDefaultElementCap = 4096;
inline constexpr std::size_t kDefaultSubgroupCap = 400;

/// Closure of `generators` by breadth-first products. The result is sorted.
/// Throws CapExceeded past `cap` elements and DomainMismatch when generator
/// degrees differ from `degree`.
std::vector<Perm> enumerate_elements(std::size_t degree, std::span<const Perm> generators,
                                     std::size_t cap = kDefaultElementCap);

class PermGroup {
 public:
  /// Trivial group on zero points.
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::size_t cap = kDefaultElementCap);

  static PermGroup trivial(std::size_t degree);

  /// Wraps an element list already known to be a group. A small generating
  /// set is picked greedily when `generators` is empty.
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> elements,
                                 std::vector<Perm> generators = {});

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::vector<Perm>& generators() const noexcept;
  /// Sorted element list.
  const std::vector<Perm>& elements() const noexcept;
  bool contains(const Perm& p) const;
  std::optional<std::size_t> index_of(const Perm& p) const;

  bool is_subgroup_of(const PermGroup& other) const;

  /// Element-set equality.
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Data;
  explicit PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Disjoint blocks covering {0..n-1}. Blocks are sorted internally and ordered
/// by their least point, so equal partitions compare equal.
struct BlockPartition {
  std::vector<std::vector<Point>> blocks;
  std::vector<std::size_t> block_of;

  static BlockPartition from_labels(std::span<const std::size_t> labels);
  static BlockPartition singletons(std::size_t n);

  std::size_t size() const noexcept { return blocks.size(); }
  std::size_t degree() const noexcept { return block_of.size(); }
  bool is_valid() const;

  friend bool operator==(const BlockPartition& a, const BlockPartition& b) {
    return a.blocks == b.blocks;
  }
};

struct ActionProfile {
  std::vector<std::size_t> orbit_sizes;  // sorted ascending
  bool transitive = false;
  bool semiregular = false;
  bool regular = false;
};

ActionProfile action_profile(const PermGroup& group);

std::vector<Point> orbit(const PermGroup& group, Point x);
/// Orbits of the group generated by `generators` on {0..degree-1}.
BlockPartition orbits_of(std::size_t degree, std::span<const Perm> generators);
BlockPartition orbits(const PermGroup& group);

PermGroup stabilizer(const PermGroup& group, Point x);

/// Throws NotASubgroup when `sub` is not contained in `group`.
bool is_normal(const PermGroup& sub, const PermGroup& group);

PermGroup centralizer(const PermGroup& group, const PermGroup& sub);

/// H^g = g^-1 H g.
PermGroup conjugate(const PermGroup& h, const Perm& g);

/// Some g in `ambient` with a^g = b, if any.
std::optional<Perm> conjugating_element(const PermGroup& a, const PermGroup& b,
                                        const PermGroup& ambient);

/// Action of p on the blocks of a partition. Throws PartitionNotInvariant.
Perm induced_on_blocks(const Perm& p, const BlockPartition& partition);

struct QuotientAction {
  PermGroup kernel;
  PermGroup induced;  // faithful, on {0..blocks-1}
};

QuotientAction kernel_and_quotient_action(const PermGroup& group,
                                          const BlockPartition& partition);

/// All normal subgroups (including 1 and the group), sorted by order and then
/// by element set. Throws CapExceeded when |group| > cap.
std::vector<PermGroup> normal_subgroups(const PermGroup& group,
                                        std::size_t cap = kDefaultElementCap);

/// Largest normal p-subgroup O_p.
PermGroup largest_normal_p_subgroup(const PermGroup& group, unsigned p,
                                    std::size_t cap = kDefaultElementCap);

/// Complete subgroup list, sorted by order and then by element set. The
/// frontier of the join closure is expanded with OpenMP.
std::vector<PermGroup> all_subgroups(const PermGroup& group,
                                     std::size_t cap = kDefaultSubgroupCap);

/// Serial reference for all_subgroups; identical output.
std::vector<PermGroup> all_subgroups_serial(const PermGroup& group,
                                            std::size_t cap = kDefaultSubgroupCap);

}  // namespace hat
