#include "hat/export.hpp"

#include <sstream>

#include "hat/error.hpp"

namespace hat {

Json to_json(const Perm& p) {
  Json a = Json::array();
  for (Point x : p.images())
    a.push_back(x);
  return a;
}

Json to_json(const OrientedGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  Json arcs = Json::array();
  for (const Arc& a : g.arcs())
    arcs.push_back({a.tail, a.head});
  j["arcs"] = std::move(arcs);
  Json labels = Json::array();
  for (const auto& ls : g.labels()) {
    Json l = Json::array();
    for (const auto& [i, k] : ls)
      l.push_back({i, k});
    labels.push_back(std::move(l));
  }
  j["labels"] = std::move(labels);
  return j;
}

Json to_json(const Og4Report& r) {
  Json j;
  j["in_og4"] = r.in_og4;
  j["connected"] = r.connected;
  j["four_valent"] = r.four_valent;
  j["vertex_transitive"] = r.vertex_transitive;
  j["edge_transitive"] = r.edge_transitive;
  j["arc_transitive"] = r.arc_transitive;
  j["orientation_preserved"] = r.orientation_preserved;
  j["arc_orbits"] = r.arc_orbits;
  if (!r.reason.empty())
    j["reason"] = r.reason;
  return j;
}

Json to_json(const AltCycleReport& r) {
  Json j;
  j["radius"] = r.radius;
  j["attachment"] = r.attachment;
  j["type"] = to_string(r.type);
  j["tie"] = r.tie;
  j["cycle_count"] = r.cycles.size();
  j["cycle_length"] = 2 * r.radius;
  return j;
}

Json to_json(const RowVerdict& v) {
  Json j;
  j["row"] = v.instance.row;
  Json params;
  params["pair"] = v.instance.pair.name();
  params["family"] = to_string(v.instance.pair.family);
  params["parameter"] = v.instance.pair.parameter;
  params["k"] = to_string(v.instance.pair.k);
  if (v.instance.a)
    params["a"] = v.instance.a;
  j["params"] = std::move(params);
  j["status"] = v.verified ? "verified" : "failed";
  j["subgroup"] = v.subgroup;
  j["expected"] = v.expected;
  j["observed"] = v.observed;
  if (!v.detail.empty())
    j["detail"] = v.detail;
  if (v.witness) {
    Json w = Json::array();
    for (Point x : *v.witness)
      w.push_back(x);
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const QuotientClass& c) {
  Json j;
  j["description"] = c.describe();
  j["blocks"] = c.m;
  j["oriented"] = c.oriented;
  if (c.group_structure)
    j["structure"] = *c.group_structure == CycleGroup::Cyclic     ? "cyclic"
                     : *c.group_structure == CycleGroup::Dihedral ? "dihedral"
                                                                  : "other";
  return j;
}

std::optional<std::string> find_subgroup_name(const GGPair& pair, const PermGroup& n) {
  if (!pair.spec)
    return std::nullopt;
  const int t = pair.spec->cycle_length();
  const bool barred = pair.spec->family == Family::Y;
  std::vector<NamedSubgroupSpec> specs;
  for (int a = 1; a <= t; ++a) {
    if (t % a == 0)
      specs.push_back({SubgroupKind::N, a, barred});
    if (t % (2 * a) == 0)
      specs.push_back({SubgroupKind::M, a, barred});
  }
  for (auto kind : {SubgroupKind::N2Plus, SubgroupKind::J, SubgroupKind::K, SubgroupKind::JPlus,
                    SubgroupKind::KPlus})
    specs.push_back({kind, 0, barred});
  for (const auto& s : specs) {
    try {
      const PermGroup g = named_subgroup(pair, s);
      if (g.order() == n.order() && g == n)
        return s.name();
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

Json basic_json(const GGPair& pair, const BasicVerdict& v) {
  Json j;
  j["pair"] = pair.name;
  j["basic"] = v.basic;
  if (v.basic_type)
    j["type"] = to_string(*v.basic_type);
  Json ws = Json::array();
  for (const auto& q : v.witnesses) {
    Json w;
    if (auto name = find_subgroup_name(pair, q.normal_subgroup))
      w["subgroup_name"] = *name;
    w["order"] = q.normal_subgroup.order();
    w["quotient_class"] = q.cls.describe();
    ws.push_back(std::move(w));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

Json to_json(const HatCatalogue& c) {
  Json j;
  j["graph"] = c.name;
  j["vertices"] = c.graph.vertex_count();
  j["aut_order"] = c.aut.order();
  Json hs = Json::array();
  for (const auto& h : c.hat)
    hs.push_back({{"order", h.group.order()}, {"maximal", h.maximal}});
  j["hat_subgroups"] = std::move(hs);
  Json ms = Json::array();
  for (const auto& m : c.maximal_up_to_conjugacy)
    ms.push_back(m.order());
  j["maximal_hat_orders"] = std::move(ms);
  j["orientation_class_count"] = c.classes.size();
  Json cs = Json::array();
  for (const auto& oc : c.classes) {
    Json o;
    o["labels"] = oc.labels;
    o["subgroups"] = oc.subgroups;
    Json arcs = Json::array();
    for (const Arc& a : oc.representative)
      arcs.push_back({a.tail, a.head});
    o["representative"] = std::move(arcs);
    cs.push_back(std::move(o));
  }
  j["classes"] = std::move(cs);
  return j;
}

std::string to_dot(const OrientedGraph& g, const std::string& name) {
  const bool directed = g.has_orientation();
  std::ostringstream out;
  out << (directed ? "digraph" : "graph") << " \"" << name << "\" {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (v < g.labels().size() && !g.labels()[v].empty()) {
      out << " [label=\"";
      for (std::size_t i = 0; i < g.labels()[v].size(); ++i)
        out << (i ? " " : "") << "(" << g.labels()[v][i].first << "," << g.labels()[v][i].second << ")";
      out << "\"]";
    }
    out << ";\n";
  }
  if (directed)
    for (const Arc& a : g.arcs())
      out << "  " << a.tail << " -> " << a.head << ";\n";
  else
    for (const Edge& e : g.edges())
      out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hat
