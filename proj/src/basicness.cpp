#include "hat/basicness.hpp"

#include <algorithm>
#include <map>

#include "hat/error.hpp"
#include "hat/pair_iso.hpp"

namespace hat {

std::string to_string(BasicType t) {
  switch (t) {
    case BasicType::Quasiprimitive: return "quasiprimitive";
    case BasicType::Biquasiprimitive: return "biquasiprimitive";
    case BasicType::Cycle: return "cycle";
  }
  return "?";
}

bool is_prime(int n) {
  if (n < 2)
    return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<QuotientReport> proper_normal_quotients(const GGPair& pair, std::size_t cap) {
  std::map<std::vector<std::vector<Point>>, bool> seen;
  std::vector<QuotientReport> out;
  for (const PermGroup& n : normal_subgroups(pair.group, cap)) {
    if (n.order() == 1)
      continue;
    const BlockPartition blocks = orbits(n);
    if (!seen.emplace(blocks.blocks, true).second)
      continue;
    out.push_back(quotient_by_partition(pair, blocks));
  }
  std::stable_sort(out.begin(), out.end(), [](const QuotientReport& a, const QuotientReport& b) {
    return a.blocks.size() > b.blocks.size();
  });
  return out;
}

BasicVerdict is_basic(const GGPair& pair, std::size_t cap) {
  BasicVerdict v;
  v.quotients = proper_normal_quotients(pair, cap);
  bool cycle = false, edge = false;
  for (const auto& q : v.quotients) {
    if (!q.cls.degenerate())
      v.witnesses.push_back(q);
    cycle |= q.cls.kind == QuotientKind::Cycle;
    edge |= q.cls.kind == QuotientKind::SingleEdge;
  }
  v.basic = v.witnesses.empty();
  if (v.basic)
    v.basic_type = cycle ? BasicType::Cycle : edge ? BasicType::Biquasiprimitive : BasicType::Quasiprimitive;
  return v;
}

std::vector<FamilySpec> candidate_specs(std::size_t vertices, std::size_t group_order) {
  std::vector<FamilySpec> all;
  for (int a = 1; static_cast<std::size_t>(a * a) <= vertices; ++a) {
    for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3}) {
      if (static_cast<std::size_t>(4 * a * a) == vertices)
        all.push_back({Family::X, a, k});
      if (static_cast<std::size_t>(2 * a * a) == vertices && a >= 2 && !(k == Orientation::K1 && a % 2))
        all.push_back({Family::Y, a, k});
    }
    if (a >= 3 && a % 2 == 1 && static_cast<std::size_t>(a * a) == vertices)
      all.push_back({Family::Z, a, Orientation::K3});
  }
  std::vector<FamilySpec> out;
  for (const auto& s : all) {
    if (s.parameter < 2)
      continue;
    const std::size_t r2 = static_cast<std::size_t>(s.parameter * s.parameter);
    std::size_t order = 0;
    switch (s.family) {
      case Family::X: order = (s.k == Orientation::K2 ? 16 : 8) * r2; break;
      case Family::Y: order = (s.k == Orientation::K2 ? 8 : 4) * r2; break;
      case Family::Z: order = 2 * r2; break;
    }
    if (order == group_order)
      out.push_back(s);
  }
  return out;
}

std::vector<BasicQuotient> basic_quotient_set(const GGPair& pair, std::size_t cap,
                                              OnUnidentified mode) {
  std::vector<std::pair<PermGroup, GGPair>> basic;
  if (is_basic(pair, cap).basic) {
    basic.emplace_back(PermGroup::trivial(pair.graph.vertex_count()), pair);
  } else {
    for (const auto& q : proper_normal_quotients(pair, cap)) {
      if (q.cls.degenerate())
        continue;
      GGPair qp = q.as_pair();
      if (is_basic(qp, cap).basic)
        basic.emplace_back(q.kernel, std::move(qp));
    }
  }
  std::vector<BasicQuotient> out;
  for (auto& [kernel, qp] : basic) {
    BasicQuotient bq{kernel, qp.graph.vertex_count(), {}};
    for (const auto& spec : candidate_specs(qp.graph.vertex_count(), qp.group.order()))
      if (pair_iso(qp, build_pair(spec)))
        bq.matches.push_back(spec);
    if (bq.matches.empty() && mode == OnUnidentified::Throw)
      throw Error(Errc::UnidentifiedQuotient,
                  "basic quotient of " + pair.name + " on " + std::to_string(bq.blocks) +
                      " vertices matches no family pair");
    out.push_back(std::move(bq));
  }
  return out;
}

std::optional<BasicType> predicted_basic_type(const FamilySpec& spec) {
  spec.validate();
  const int r = spec.parameter;
  switch (spec.family) {
    case Family::X:
      if (spec.k == Orientation::K1 && r % 2 == 1 && is_prime(r))
        return BasicType::Cycle;
      return std::nullopt;
    case Family::Y:
      if (r == 2)
        return BasicType::Cycle;
      if (r % 2 == 1 && spec.k == Orientation::K2 && is_prime(r))
        return BasicType::Biquasiprimitive;
      return std::nullopt;
    case Family::Z:
      if (is_prime(r))
        return BasicType::Cycle;
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<FamilySpec> predicted_basic_quotients(const FamilySpec& spec) {
  spec.validate();
  const int r = spec.parameter;
  std::vector<FamilySpec> out;
  if (spec.family == Family::Z) {
    for (int a = 3; a <= r; a += 2)
      if (r % a == 0 && is_prime(a))
        out.push_back({Family::Z, a, Orientation::K3});
    return out;
  }
  switch (spec.k) {
    case Orientation::K1:
      if (r % 2 == 0)
        out.push_back({Family::Y, 2, Orientation::K1});
      for (int a = 3; a <= r; a += 2)
        if (r % a == 0 && is_prime(a))
          out.push_back({Family::X, a, Orientation::K1});
      break;
    case Orientation::K2:
      for (int a = 2; a <= 2 * r; ++a)
        if ((2 * r) % a == 0 && is_prime(a))
          out.push_back({Family::Y, a, Orientation::K2});
      break;
    case Orientation::K3:
      if (r % 2 == 0)
        out.push_back({Family::Y, 2, Orientation::K3});
      for (int a = 3; a <= r; a += 2)
        if (r % a == 0 && is_prime(a))
          out.push_back({Family::Z, a, Orientation::K3});
      break;
    case Orientation::Full:
      break;
  }
  return out;
}

}  // namespace hat
