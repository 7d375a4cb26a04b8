#pragma once

// Machine checks of the catalogued normal quotients.
//
// Row ids "T3.L1".."T3.L7" are the non-degenerate quotients and
// "T4.L1".."T4.L8" the degenerate ones. A row instance binds a family pair
// and, for T3 rows, the divisor a.

#include <optional>
#include <string>
#include <vector>

#include "hat/pair_iso.hpp"
#include "hat/quotients.hpp"

namespace hat {

struct RowInstance {
  std::string row;
  FamilySpec pair;
  int a = 0;  // T3 rows only

  friend bool operator==(const RowInstance&, const RowInstance&) = default;
};

struct RowVerdict {
  RowInstance instance;
  bool verified = false;
  std::string subgroup;  // name of N
  std::string expected;  // target description
  std::string observed;  // what the quotient turned out to be
  std::string detail;    // failure reason or a note
  std::optional<VertexMap> witness;
};

const std::vector<std::string>& table3_rows();
const std::vector<std::string>& table4_rows();

/// Empty when the instance satisfies the row's conditions, else the reason.
std::string row_condition_failure(const RowInstance& inst);

/// The named subgroup N of the row.
NamedSubgroupSpec row_subgroup(const RowInstance& inst);

/// Expected target pair of a T3 row.
FamilySpec table3_target(const RowInstance& inst);

/// Builds the pair and N, forms the quotient and checks it against the row.
/// Throws ConditionsViolated when the row's conditions fail.
RowVerdict verify_table_row(const RowInstance& inst);

/// All instances of T3 (which = "table3") or T4 ("table4") rows whose
/// conditions hold for the given pair, in row order and then by a.
std::vector<RowInstance> applicable_rows(const std::string& which, const FamilySpec& pair);

}  // namespace hat
