#include "hat/orientations.hpp"

#include <algorithm>
#include <map>

#include "hat/error.hpp"
#include "hat/og4.hpp"
#include "hat/pair_iso.hpp"

namespace hat {

std::vector<HatSubgroup> hat_subgroups(const OrientedGraph& graph, const PermGroup& aut,
                                       std::size_t cap) {
  const std::size_t n = graph.vertex_count();
  std::vector<HatSubgroup> out;
  for (PermGroup& h : all_subgroups(aut, cap)) {
    // Vertex-transitive needs n | |h|; half-arc-transitive needs |E| | |h|.
    if (n == 0 || h.order() % n || h.order() % graph.edge_count())
      continue;
    if (is_half_arc_transitive(graph, h))
      out.push_back({std::move(h), false});
  }
  // all_subgroups sorts by order, so overgroups come later.
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].maximal = true;
    for (std::size_t j = i + 1; j < out.size() && out[i].maximal; ++j)
      if (out[j].group.order() > out[i].group.order() && out[i].group.is_subgroup_of(out[j].group))
        out[i].maximal = false;
  }
  return out;
}

std::vector<Arc> invariant_orientation(const OrientedGraph& graph, const PermGroup& h) {
  if (graph.vertex_count() == 0 || graph.neighbors(0).empty() || !is_half_arc_transitive(graph, h))
    throw Error(Errc::NotHalfArcTransitive, "group is not half-arc-transitive on the graph");
  const Point first = *std::min_element(graph.neighbors(0).begin(), graph.neighbors(0).end());
  std::vector<Arc> arcs;
  arcs.reserve(h.order());
  for (const Perm& g : h.elements())
    arcs.push_back({g(0), g(first)});
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  if (arcs.size() != graph.edge_count())
    throw Error(Errc::NotHalfArcTransitive, "arc orbit does not pick one arc per edge");
  return arcs;
}

namespace {

// The orientations defined on the family graph, keyed by label.
std::vector<std::pair<std::string, std::vector<Arc>>> defined_orientations(Family f, int p) {
  std::vector<std::pair<std::string, std::vector<Arc>>> out;
  for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3}) {
    const FamilySpec spec{f, p, k};
    try {
      spec.validate();
    } catch (const Error&) {
      continue;
    }
    const GGPair pair = build_pair(spec);
    if (pair.graph.has_orientation())
      out.emplace_back("k=" + to_string(k), pair.graph.arcs());
  }
  return out;
}

}  // namespace

HatCatalogue build_catalogue(Family f, int parameter, std::size_t cap, AmbientGroup ambient) {
  const FamilySpec spec{f, parameter, Orientation::Full};
  spec.validate();
  HatCatalogue c;
  GGPair full = build_pair(spec);
  c.graph = full.graph;
  c.graph.clear_orientation();
  c.name = to_string(f) + "(" + std::to_string(parameter) + ")";
  c.aut = ambient == AmbientGroup::Grid ? full.group
                                        : automorphism_group(c.graph, false, kDefaultElementCap);
  c.hat = hat_subgroups(c.graph, c.aut, cap);

  for (const auto& h : c.hat) {
    if (!h.maximal)
      continue;
    const bool known = std::any_of(c.maximal_up_to_conjugacy.begin(), c.maximal_up_to_conjugacy.end(),
                                   [&](const PermGroup& m) {
                                     return m.order() == h.group.order() &&
                                            conjugating_element(m, h.group, c.aut).has_value();
                                   });
    if (!known)
      c.maximal_up_to_conjugacy.push_back(h.group);
  }

  std::vector<std::pair<std::string, std::vector<Arc>>> defined;
  for (auto& [label, arcs] : defined_orientations(f, parameter))
    defined.emplace_back(label, canonical_orientation(c.aut, arcs));

  std::map<std::vector<Arc>, std::size_t> index;
  for (const auto& h : c.hat) {
    const auto key = canonical_orientation(c.aut, invariant_orientation(c.graph, h.group));
    auto [it, fresh] = index.emplace(key, c.classes.size());
    if (fresh) {
      OrientationClass oc{key, {}, 0};
      for (const auto& [label, canon] : defined)
        if (canon == key)
          oc.labels.push_back(label);
      c.classes.push_back(std::move(oc));
    }
    ++c.classes[it->second].subgroups;
  }
  return c;
}

TheoremCheck verify_orientation_theorem(Family f, int parameter, std::size_t cap,
                                        AmbientGroup ambient) {
  TheoremCheck tc;
  tc.catalogue = build_catalogue(f, parameter, cap, ambient);
  const HatCatalogue& c = tc.catalogue;
  bool ok = true;
  auto record = [&](bool pass, const std::string& what) {
    tc.checks.push_back((pass ? "ok: " : "FAIL: ") + what);
    ok = ok && pass;
  };

  std::optional<std::size_t> expected;
  if (f == Family::X)
    expected = 3;
  else if (f == Family::Z)
    expected = 1;
  else if (parameter % 2 == 1)
    expected = 2;
  if (expected)
    record(c.classes.size() == *expected, c.name + " has " + std::to_string(c.classes.size()) +
                                              " orientation classes, expected " +
                                              std::to_string(*expected));

  for (const auto& [label, arcs] : defined_orientations(f, parameter)) {
    const auto it = std::find_if(c.classes.begin(), c.classes.end(), [&](const OrientationClass& oc) {
      return std::find(oc.labels.begin(), oc.labels.end(), label) != oc.labels.end();
    });
    record(it != c.classes.end(), "orientation " + label + " is preserved by a half-arc-transitive subgroup");
    if (it != c.classes.end() && it->labels.size() > 1)
      record(false, "orientation " + label + " shares its class with another defined orientation");
  }
  if (expected) {
    const bool all_named = std::none_of(c.classes.begin(), c.classes.end(),
                                        [](const OrientationClass& oc) { return oc.labels.empty(); });
    record(all_named, "every orientation class is one of the defined orientations");
  }

  if (f == Family::X) {
    std::vector<PermGroup> gk;
    for (auto k : {Orientation::K1, Orientation::K2, Orientation::K3})
      gk.push_back(build_pair({f, parameter, k}).group);
    bool match = gk.size() == c.maximal_up_to_conjugacy.size();
    for (const auto& g : gk)
      match = match && std::any_of(c.maximal_up_to_conjugacy.begin(), c.maximal_up_to_conjugacy.end(),
                                   [&](const PermGroup& m) {
                                     return m.order() == g.order() &&
                                            conjugating_element(m, g, c.aut).has_value();
                                   });
    record(match, "maximal half-arc-transitive subgroups are conjugate to G_1, G_2, G_3 (" +
                      std::to_string(c.maximal_up_to_conjugacy.size()) + " classes)");
  }

  if (f == Family::X || f == Family::Z) {
    const int t = f == Family::X ? 2 * parameter : parameter;
    const GeneratorSet gs = build_generators(t);
    const std::size_t n = c.graph.vertex_count();
    const std::vector<PermGroup> types{PermGroup(n, {gs.tau}), PermGroup(n, {gs.sigma1 * gs.sigma2}),
                                       PermGroup(n, {gs.sigma1, gs.sigma2})};
    bool stab_ok = true;
    for (const auto& h : c.hat) {
      const PermGroup s = stabilizer(h.group, 0);
      stab_ok = stab_ok && std::any_of(types.begin(), types.end(), [&](const PermGroup& ty) {
                  return ty.order() == s.order() && conjugating_element(s, ty, c.aut).has_value();
                });
    }
    record(stab_ok, "vertex stabilizers are conjugate to <tau>, <sigma1 sigma2> or <sigma1,sigma2>");

    const std::vector<Perm> forbidden{gs.sigma1 * gs.mu1, gs.sigma2 * gs.mu2,
                                      gs.sigma1 * gs.sigma2 * gs.mu1, gs.sigma1 * gs.sigma2 * gs.mu2};
    const bool none = std::none_of(c.hat.begin(), c.hat.end(), [&](const HatSubgroup& h) {
      return std::any_of(forbidden.begin(), forbidden.end(),
                         [&](const Perm& p) { return h.group.contains(p); });
    });
    record(none, "no half-arc-transitive subgroup contains sigma1 mu1, sigma2 mu2, "
                 "sigma1 sigma2 mu1 or sigma1 sigma2 mu2");
  }

  if (f == Family::Y) {
    const PermGroup h = build_pair({f, parameter, Orientation::Full}).group;
    record(c.aut == h, "|Aut " + c.name + "| = " + std::to_string(c.aut.order()) +
                           " equals the induced grid group of order " + std::to_string(h.order()));
  }
  tc.passed = ok;
  return tc;
}

}  // namespace hat
