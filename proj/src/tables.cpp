#include "hat/tables.hpp"

#include "hat/error.hpp"

namespace hat {

namespace {

bool is_t3(const std::string& row) { return row.rfind("T3.", 0) == 0; }

int line_of(const std::string& row) {
  if (row.size() != 5 || (row.rfind("T3.L", 0) != 0 && row.rfind("T4.L", 0) != 0))
    throw Error(Errc::BadParameter, "unknown table row '" + row + "'");
  const int line = row[4] - '0';
  if (line < 1 || line > (is_t3(row) ? 7 : 8))
    throw Error(Errc::BadParameter, "unknown table row '" + row + "'");
  return line;
}

struct Expectation {
  QuotientKind kind;
  std::size_t m;
  std::optional<CycleGroup> structure;
  std::size_t group_order;
  bool kernel_equal;  // otherwise the kernel need only contain N
  std::string text;
};

Expectation table4_expectation(const RowInstance& inst) {
  const int line = line_of(inst.row);
  const auto t = static_cast<std::size_t>(inst.pair.cycle_length());
  const auto r = static_cast<std::size_t>(inst.pair.parameter);
  auto cyc = [](std::size_t m, CycleGroup c) {
    const bool dihedral = c == CycleGroup::Dihedral;
    return Expectation{QuotientKind::Cycle, m, c, dihedral ? 2 * m : m, true,
                       "(C_" + std::to_string(m) + "," + (dihedral ? "D_" + std::to_string(2 * m)
                                                                    : "Z_" + std::to_string(m)) + ")"};
  };
  switch (line) {
    case 1: return cyc(4, CycleGroup::Dihedral);
    case 2: return cyc(4, CycleGroup::Cyclic);
    case 3: return {QuotientKind::SingleEdge, 2, std::nullopt, 2, true, "(K_2,Z_2)"};
    case 4: return {QuotientKind::SingleEdge, 2, std::nullopt, 2, false, "(K_2,Z_2)"};
    case 5: return cyc(t, CycleGroup::Dihedral);
    case 6: return cyc(t, CycleGroup::Cyclic);
    case 7: return cyc(r, CycleGroup::Dihedral);
    case 8: return cyc(r, CycleGroup::Cyclic);
  }
  throw Error(Errc::BadParameter, "unknown table row");
}

}  // namespace

const std::vector<std::string>& table3_rows() {
  static const std::vector<std::string> rows{"T3.L1", "T3.L2", "T3.L3", "T3.L4",
                                             "T3.L5", "T3.L6", "T3.L7"};
  return rows;
}

const std::vector<std::string>& table4_rows() {
  static const std::vector<std::string> rows{"T4.L1", "T4.L2", "T4.L3", "T4.L4",
                                             "T4.L5", "T4.L6", "T4.L7", "T4.L8"};
  return rows;
}

std::string row_condition_failure(const RowInstance& inst) {
  const int line = line_of(inst.row);
  try {
    inst.pair.validate();
  } catch (const Error& e) {
    return e.what();
  }
  const Family f = inst.pair.family;
  const int k = static_cast<int>(inst.pair.k);
  const int r = inst.pair.parameter;
  const int a = inst.a;
  if (k == 0)
    return "rows apply to oriented pairs only";
  if (r < 2)
    return "parameter must be at least 2";

  if (is_t3(inst.row)) {
    if (a <= 1)
      return "needs a > 1";
    switch (line) {
      case 1:
        if (f != Family::X) return "row is for X(r)";
        if (!(a < r && r % a == 0)) return "needs a < r and a | r";
        return {};
      case 2:
        if (f != Family::X) return "row is for X(r)";
        if (r % a != 0) return "needs 2r/a even";
        if (k == 1 && a % 2 != 0) return "needs a even when k = 1";
        return {};
      case 3:
        if (f != Family::X || k != 3) return "row is for X(r) with k = 3";
        if (a % 2 == 0 || (2 * r) % a != 0) return "needs a odd dividing 2r";
        return {};
      case 4:
        if (f != Family::Y) return "row is for Y(r)";
        if (r % a != 0 || (r / a) % 2 != 0) return "needs r/a even";
        return {};
      case 5:
        if (f != Family::Y) return "row is for Y(r)";
        if (r % a != 0 || a >= r) return "needs 2r/a > 2 even";
        if (k == 1 && a % 2 != 0) return "needs a even when k = 1";
        return {};
      case 6:
        if (f != Family::Y || k != 3) return "row is for Y(r) with k = 3";
        if (a % 2 == 0 || (2 * r) % a != 0) return "needs a odd dividing 2r";
        return {};
      case 7:
        if (f != Family::Z) return "row is for Z(s)";
        if (!(a < r && r % a == 0)) return "needs a < s and a | s";
        return {};
    }
  }

  if (a != 0)
    return "degenerate rows take no divisor";
  switch (line) {
    case 1:
    case 2:
      if ((line == 1) != (k != 2)) return line == 1 ? "needs k = 1 or 3" : "needs k = 2";
      if (f == Family::Z) return "row is for X(r) and Y(r)";
      if (f == Family::Y && r % 2 != 0) return "needs r even for Y(r)";
      return {};
    case 3:
    case 4:
      if (f != Family::Y) return "row is for Y(r)";
      if (k != (line == 3 ? 2 : 3)) return line == 3 ? "needs k = 2" : "needs k = 3";
      if (r % 2 == 0) return "needs r odd";
      return {};
    case 5:
    case 6:
      if (k != 3) return "needs k = 3";
      return {};
    case 7:
    case 8:
      if (k != 3) return "needs k = 3";
      if (f == Family::Z) return "row is for X(r) and Y(r)";
      if (r < 3) return "needs r >= 3 so that C_r is a cycle";
      return {};
  }
  return "unknown row";
}

NamedSubgroupSpec row_subgroup(const RowInstance& inst) {
  const int line = line_of(inst.row);
  const bool barred = inst.pair.family == Family::Y;
  if (is_t3(inst.row)) {
    switch (line) {
      case 1:
      case 4: return {SubgroupKind::N, 2 * inst.a, barred};
      case 2:
      case 5: return {SubgroupKind::M, inst.a, barred};
      default: return {SubgroupKind::N, inst.a, barred};
    }
  }
  switch (line) {
    case 1:
    case 4: return {SubgroupKind::N, 2, barred};
    case 2:
    case 3: return {SubgroupKind::N2Plus, 0, barred};
    case 5: return {SubgroupKind::J, 0, barred};
    case 6: return {SubgroupKind::K, 0, barred};
    case 7: return {SubgroupKind::JPlus, 0, barred};
    default: return {SubgroupKind::KPlus, 0, barred};
  }
}

FamilySpec table3_target(const RowInstance& inst) {
  switch (line_of(inst.row)) {
    case 1:
    case 4: return {Family::X, inst.a, inst.pair.k};
    case 2:
    case 5: return {Family::Y, inst.a, inst.pair.k};
    default: return {Family::Z, inst.a, Orientation::K3};
  }
}

RowVerdict verify_table_row(const RowInstance& inst) {
  if (const auto why = row_condition_failure(inst); !why.empty())
    throw Error(Errc::ConditionsViolated, inst.row + " " + inst.pair.name() + ": " + why);
  RowVerdict v;
  v.instance = inst;
  const NamedSubgroupSpec sub = row_subgroup(inst);
  v.subgroup = sub.name();
  try {
    const GGPair pair = build_pair(inst.pair);
    const PermGroup n = named_subgroup(pair, sub);
    const QuotientReport q = normal_quotient(pair, n);

    if (is_t3(inst.row)) {
      const FamilySpec target_spec = table3_target(inst);
      v.expected = target_spec.name();
      v.observed = q.cls.describe() + ", group order " + std::to_string(q.induced.order());
      if (q.cls.kind != QuotientKind::Valency4 || !q.is_cover) {
        v.detail = "quotient is not a valency-4 cover";
        return v;
      }
      const GGPair target = build_pair(target_spec);
      const auto iso = pair_iso(q.as_pair(), target);
      if (!iso) {
        v.detail = "no pair isomorphism to the target";
        return v;
      }
      v.witness = iso->vertex_map;
      v.verified = true;
      if (iso->reverses_orientation)
        v.detail = "isomorphism reverses the orientation";
      return v;
    }

    const Expectation want = table4_expectation(inst);
    v.expected = want.text;
    v.observed = q.cls.describe();
    if (q.cls.group_structure)
      v.observed += " " + to_string(*q.cls.group_structure);
    v.observed += ", group order " + std::to_string(q.induced.order());
    if (q.cls.kind != want.kind || q.cls.m != want.m || q.induced.order() != want.group_order ||
        q.cls.group_structure != want.structure) {
      v.detail = "quotient class differs";
      return v;
    }
    if (want.kernel_equal ? !(q.kernel == n) : !n.is_subgroup_of(q.kernel)) {
      v.detail = "kernel has order " + std::to_string(q.kernel.order()) + ", N has order " +
                 std::to_string(n.order());
      return v;
    }
    if (!want.kernel_equal && !(q.kernel == n))
      v.detail = "kernel of order " + std::to_string(q.kernel.order()) + " properly contains N";
    v.verified = true;
  } catch (const Error& e) {
    v.verified = false;
    v.detail = e.what();
  }
  return v;
}

std::vector<RowInstance> applicable_rows(const std::string& which, const FamilySpec& pair) {
  std::vector<RowInstance> out;
  if (which == "table3") {
    for (const auto& row : table3_rows())
      for (int a = 2; a <= pair.cycle_length(); ++a) {
        RowInstance inst{row, pair, a};
        if (row_condition_failure(inst).empty())
          out.push_back(inst);
      }
  } else if (which == "table4") {
    for (const auto& row : table4_rows()) {
      RowInstance inst{row, pair, 0};
      if (row_condition_failure(inst).empty())
        out.push_back(inst);
    }
  } else {
    throw Error(Errc::BadParameter, "unknown table '" + which + "'");
  }
  return out;
}

}  // namespace hat
