#pragma once

// Indexed view of an enumerated group: elements are numbered by their
// position in PermGroup::elements(), products are table lookups and subsets
// are bitsets. Used by the subgroup lattice code.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hat/perm_group.hpp"

namespace hat {

using ElemIndex = std::uint32_t;

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  bool test(ElemIndex i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(ElemIndex i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<ElemIndex> members() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Orders by the bit words; used only to canonicalize output order.
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.words_ < b.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A subgroup inside a GroupTable: its element set plus a short generating set.
struct IndexedSubgroup {
  ElementSet elements;
  std::vector<ElemIndex> generators;
};

class GroupTable {
 public:
  /// Builds the full multiplication table, rows in parallel.
  explicit GroupTable(const PermGroup& group);

  /// Serial reference constructor; the table is identical.
  static GroupTable build_serial(const PermGroup& group);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t order() const noexcept { return n_; }
  ElemIndex identity() const noexcept { return identity_; }
  ElemIndex mul(ElemIndex a, ElemIndex b) const noexcept { return table_[std::size_t{a} * n_ + b]; }
  ElemIndex inv(ElemIndex a) const noexcept { return inverse_[a]; }
  ElemIndex conj(ElemIndex x, ElemIndex g) const noexcept { return mul(mul(inverse_[g], x), g); }
  std::span<const ElemIndex> group_generators() const noexcept { return generators_; }
  const std::vector<ElemIndex>& raw_table() const noexcept { return table_; }

  /// Subgroup generated by `generators`.
  IndexedSubgroup closure(std::span<const ElemIndex> generators) const;
  /// <base, extra> where base is already a subgroup.
  IndexedSubgroup extend(const IndexedSubgroup& base, std::span<const ElemIndex> extra) const;

  PermGroup to_group(const IndexedSubgroup& sub) const;
  ElementSet to_set(const PermGroup& sub) const;

  /// Conjugacy classes, each sorted, ordered by least member.
  std::vector<std::vector<ElemIndex>> conjugacy_classes() const;

 private:
  struct SerialTag {};
  GroupTable(const PermGroup& group, SerialTag);
  void init_indices();

  PermGroup group_;
  std::size_t n_ = 0;
  ElemIndex identity_ = 0;
  std::vector<ElemIndex> table_;
  std::vector<ElemIndex> inverse_;
  std::vector<ElemIndex> generators_;
};

}  // namespace hat
