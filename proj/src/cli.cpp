#include "hat/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "hat/basicness.hpp"
#include "hat/error.hpp"
#include "hat/export.hpp"
#include "hat/og4.hpp"
#include "hat/orientations.hpp"
#include "hat/tables.hpp"

namespace hat {

std::vector<int> parse_parameter_list(const std::string& text) {
  std::vector<int> out;
  auto number = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(Errc::BadParameter, "bad parameter list '" + text + "'");
    return std::stoi(s);
  };
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty())
      continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const int lo = number(part.substr(0, dots));
    const int hi = number(part.substr(dots + 2));
    for (int v = lo; v <= hi; ++v)
      out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Orientation> parse_orientation_list(const std::string& text) {
  std::vector<Orientation> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part == "1") out.push_back(Orientation::K1);
    else if (part == "2") out.push_back(Orientation::K2);
    else if (part == "3") out.push_back(Orientation::K3);
    else if (part == "full") out.push_back(Orientation::Full);
    else throw Error(Errc::BadParameter, "bad orientation '" + part + "' (use 1, 2, 3 or full)");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<FamilySpec> selected_specs(const RunConfig& cfg, std::vector<std::string>* skipped) {
  std::vector<FamilySpec> out;
  auto add = [&](Family f, const std::vector<int>& params) {
    for (int p : params)
      for (Orientation k : cfg.ks) {
        if (f == Family::Z && !cfg.k_given)
          k = Orientation::K3;
        const FamilySpec spec{f, p, k};
        try {
          spec.validate();
        } catch (const Error& e) {
          if (skipped)
            skipped->push_back(to_string(f) + "(" + std::to_string(p) + ") k=" + to_string(k) + ": " +
                               e.what());
          continue;
        }
        if (std::find(out.begin(), out.end(), spec) == out.end())
          out.push_back(spec);
      }
  };
  add(Family::X, cfg.x);
  add(Family::Y, cfg.y);
  add(Family::Z, cfg.z);
  return out;
}

namespace {

struct Item {
  std::string name;
  bool ok = true;
  std::string text;
  Json json;
};

std::string error_text(const std::exception& e) { return e.what(); }

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<Item> run_validate(const FamilySpec& spec) {
  Item it;
  it.name = spec.name();
  const GGPair pair = build_pair(spec);
  it.json["pair"] = pair.name;
  if (!pair.graph.has_orientation()) {
    // Full groups and degenerate parameters: expected outside OG(4).
    const bool arc_transitive = pair.graph.edge_count() > 0 &&
                                action_profile(pair.group).transitive &&
                                arc_orbit_count(pair.graph, pair.group) == 1;
    it.json["in_og4"] = false;
    it.json["arc_transitive"] = arc_transitive;
    it.text = pair.graph.degenerate() ? "degenerate, no orientation, not in OG(4)"
                                      : std::string(arc_transitive ? "arc-transitive" : "not arc-transitive") +
                                            ", not in OG(4)";
    it.ok = pair.graph.degenerate() || arc_transitive;
    return {it};
  }
  const Og4Report r = validate_og4(pair);
  it.json["og4"] = to_json(r);
  it.ok = r.in_og4;
  it.text = r.in_og4 ? "in OG(4)" : "not in OG(4): " + r.reason;
  if (r.in_og4) {
    const AltCycleReport ac = alternating_cycles(pair);
    it.json["alternating_cycles"] = to_json(ac);
    it.text += ", alternating cycles " + pair_text(ac.radius, ac.attachment) + " " + to_string(ac.type);
    if (const auto stated = stated_alternating(spec)) {
      const bool agree = stated->first == ac.radius && stated->second == ac.attachment;
      it.json["stated_alternating"] = {stated->first, stated->second};
      it.json["agrees_with_stated"] = agree;
      if (!agree)
        it.text += " (stated " + pair_text(stated->first, stated->second) + ")";
    }
  }
  return {it};
}

std::vector<Item> run_tables(const RunConfig& cfg, const FamilySpec& spec) {
  std::vector<Item> items;
  const GGPair pair = build_pair(spec);
  if (cfg.which == "table2") {
    Item it;
    it.name = spec.name();
    const BasicVerdict v = is_basic(pair, cfg.cap_elements);
    const auto predicted = predicted_basic_type(spec);
    it.ok = v.basic == predicted.has_value() && (!v.basic || v.basic_type == predicted);
    it.json = basic_json(pair, v);
    it.json["predicted"] = predicted ? to_string(*predicted) : "not basic";
    it.text = v.basic ? "basic, " + to_string(*v.basic_type) : "not basic";
    if (!v.basic)
      it.text += " (" + std::to_string(v.witnesses.size()) + " non-degenerate quotients)";
    if (!it.ok)
      it.text += "; predicted " + std::string(predicted ? to_string(*predicted) : "not basic");
    items.push_back(std::move(it));
  } else if (cfg.which == "table3" || cfg.which == "table4") {
    for (const RowInstance& inst : applicable_rows(cfg.which, spec)) {
      Item it;
      it.name = inst.row + " " + spec.name() + (inst.a ? " a=" + std::to_string(inst.a) : "");
      const RowVerdict v = verify_table_row(inst);
      it.ok = v.verified;
      it.json = to_json(v);
      it.text = v.subgroup + " -> " + v.observed + (v.verified ? "" : " (expected " + v.expected + ")");
      if (!v.detail.empty())
        it.text += "; " + v.detail;
      items.push_back(std::move(it));
    }
  } else {  // remark14c
    Item it;
    it.name = spec.name();
    const auto found = basic_quotient_set(pair, cfg.cap_elements, OnUnidentified::Report);
    const auto predicted = predicted_basic_quotients(spec);
    Json fj = Json::array();
    std::string found_text;
    for (const auto& bq : found) {
      Json m = Json::array();
      std::string names;
      for (const auto& s : bq.matches) {
        m.push_back(s.name());
        names += (names.empty() ? "" : "=") + s.name();
      }
      fj.push_back({{"blocks", bq.blocks}, {"kernel_order", bq.kernel.order()}, {"matches", m}});
      found_text += (found_text.empty() ? "" : ", ") +
                    (names.empty() ? "unidentified on " + std::to_string(bq.blocks) : names);
    }
    Json pj = Json::array();
    std::string missing;
    for (const auto& p : predicted) {
      pj.push_back(p.name());
      const bool present = std::any_of(found.begin(), found.end(), [&](const BasicQuotient& bq) {
        return std::find(bq.matches.begin(), bq.matches.end(), p) != bq.matches.end();
      });
      if (!present)
        missing += (missing.empty() ? "" : ", ") + p.name();
    }
    it.ok = missing.empty();
    it.json = {{"pair", spec.name()}, {"basic_quotients", fj}, {"predicted", pj}, {"contained", it.ok}};
    it.text = "basic quotients {" + found_text + "}";
    if (!it.ok)
      it.text += "; missing " + missing;
    items.push_back(std::move(it));
  }
  return items;
}

NamedSubgroupSpec parse_subgroup(const std::string& text, bool barred) {
  std::string s = text;
  if (s.rfind("bar ", 0) == 0)
    s = s.substr(4);
  if (s == "N(2,+)") return {SubgroupKind::N2Plus, 0, barred};
  if (s == "J") return {SubgroupKind::J, 0, barred};
  if (s == "K") return {SubgroupKind::K, 0, barred};
  if (s == "J(+)") return {SubgroupKind::JPlus, 0, barred};
  if (s == "K(+)") return {SubgroupKind::KPlus, 0, barred};
  if (s.size() > 3 && (s[0] == 'N' || s[0] == 'M') && s[1] == '(' && s.back() == ')') {
    const auto v = parse_parameter_list(s.substr(2, s.size() - 3));
    if (v.size() == 1)
      return {s[0] == 'N' ? SubgroupKind::N : SubgroupKind::M, v[0], barred};
  }
  throw Error(Errc::BadParameter, "unknown subgroup '" + text + "'");
}

Item quotient_item(const std::string& name, const GGPair& pair, const QuotientReport& q) {
  Item it;
  it.name = name;
  it.json["pair"] = pair.name;
  if (auto n = find_subgroup_name(pair, q.normal_subgroup))
    it.json["subgroup_name"] = *n;
  it.json["subgroup_order"] = q.normal_subgroup.order();
  it.json["kernel_order"] = q.kernel.order();
  it.json["quotient_class"] = to_json(q.cls);
  it.json["induced_order"] = q.induced.order();
  it.json["cover"] = q.is_cover;
  std::string text = q.cls.describe() + (q.cls.oriented ? " oriented" : "") + ", induced group of order " +
                     std::to_string(q.induced.order());
  if (q.cls.group_structure)
    text += *q.cls.group_structure == CycleGroup::Dihedral ? " (dihedral)"
            : *q.cls.group_structure == CycleGroup::Cyclic ? " (cyclic)"
                                                           : "";
  if (q.is_cover)
    text += ", normal cover";
  it.text = text;
  return it;
}

std::vector<Item> run_quotient(const RunConfig& cfg, const FamilySpec& spec) {
  const GGPair pair = build_pair(spec);
  std::vector<Item> items;
  if (!cfg.subgroup.empty()) {
    const auto ns = parse_subgroup(cfg.subgroup, spec.family == Family::Y);
    const PermGroup n = named_subgroup(pair, ns);
    items.push_back(quotient_item(spec.name() + " / " + ns.name(), pair, normal_quotient(pair, n)));
    return items;
  }
  for (const auto& q : proper_normal_quotients(pair, cfg.cap_elements)) {
    const std::string label = find_subgroup_name(pair, q.normal_subgroup).value_or(
        "kernel of order " + std::to_string(q.kernel.order()));
    items.push_back(quotient_item(spec.name() + " / " + label, pair, q));
  }
  return items;
}

std::vector<Item> run_basic(const RunConfig& cfg, const FamilySpec& spec) {
  const GGPair pair = build_pair(spec);
  Item it;
  it.name = spec.name();
  const BasicVerdict v = is_basic(pair, cfg.cap_elements);
  it.json = basic_json(pair, v);
  const auto found = basic_quotient_set(pair, cfg.cap_elements, OnUnidentified::Report);
  Json fj = Json::array();
  std::string names;
  for (const auto& bq : found) {
    Json m = Json::array();
    std::string one;
    for (const auto& s : bq.matches) {
      m.push_back(s.name());
      one += (one.empty() ? "" : "=") + s.name();
    }
    fj.push_back({{"blocks", bq.blocks}, {"kernel_order", bq.kernel.order()}, {"matches", m}});
    names += (names.empty() ? "" : ", ") + (one.empty() ? "unidentified on " + std::to_string(bq.blocks) : one);
  }
  it.json["basic_quotients"] = std::move(fj);
  it.text = (v.basic ? "basic, " + to_string(*v.basic_type) : std::string("not basic")) +
            "; basic quotients {" + names + "}";
  return {it};
}

std::vector<Item> run_orientations(const RunConfig& cfg, Family f, int p) {
  Item it;
  it.name = to_string(f) + "(" + std::to_string(p) + ")";
  const auto ambient = cfg.ambient == "grid" ? AmbientGroup::Grid : AmbientGroup::Exhaustive;
  const TheoremCheck tc = verify_orientation_theorem(f, p, cfg.cap_subgroups, ambient);
  it.ok = tc.passed;
  it.json = to_json(tc.catalogue);
  it.json["checks"] = tc.checks;
  it.json["passed"] = tc.passed;
  std::string text = "|Aut| = " + std::to_string(tc.catalogue.aut.order()) + ", " +
                     std::to_string(tc.catalogue.hat.size()) + " HAT subgroups, " +
                     std::to_string(tc.catalogue.classes.size()) + " orientation classes";
  for (const auto& c : tc.checks)
    text += "\n    " + c;
  it.text = text;
  return {it};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string xs, ys, zs, rs, ks;
  CLI::App app{"Normal quotients of the oriented four-valent graph families X(r), Y(r), Z(s)", "hatq"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--x", xs, "X(r) parameters, e.g. 2..6 or 3,5");
    sub->add_option("--y", ys, "Y(r) parameters");
    sub->add_option("--z", zs, "Z(s) parameters (odd)");
    sub->add_option("--r", rs, "parameters for both X(r) and Y(r)");
    if (with_k)
      sub->add_option("--k", ks, "orientation: 1, 2, 3 or full (comma list allowed)");
    sub->add_option("--format", cfg.format, "text or json (export: dot or json)");
    sub->add_option("--cap-elements", cfg.cap_elements, "element enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--cap-subgroups", cfg.cap_subgroups, "subgroup lattice cap (group order)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "write the report to this file");
  };
  auto* validate = app.add_subcommand("validate", "OG(4) membership and alternating cycles");
  common(validate, true);
  auto* tables = app.add_subcommand("tables", "check table rows: table2, table3, table4, remark14c");
  tables->add_option("which", cfg.which)->required()->check(
      CLI::IsMember({"table2", "table3", "table4", "remark14c"}));
  common(tables, true);
  auto* quotient = app.add_subcommand("quotient", "normal quotients of a pair");
  quotient->add_option("--subgroup", cfg.subgroup, "named subgroup, e.g. N(2), M(3), J, K(+)");
  common(quotient, true);
  auto* basic = app.add_subcommand("basic", "basicness and basic normal quotients");
  common(basic, true);
  auto* orientations = app.add_subcommand("orientations", "exhaustive orientation classification");
  orientations->add_option("--ambient", cfg.ambient, "aut (exhaustive search) or grid")
      ->check(CLI::IsMember({"aut", "grid"}));
  common(orientations, false);
  auto* exp = app.add_subcommand("export", "write graphs as DOT or JSON");
  common(exp, true);

  std::vector<std::string> argv_r(args.rbegin(), args.rend());
  try {
    app.parse(argv_r);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hatq: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::string> skipped;
  std::vector<FamilySpec> specs;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.x = parse_parameter_list(xs);
    cfg.y = parse_parameter_list(ys);
    cfg.z = parse_parameter_list(zs);
    for (int r : parse_parameter_list(rs)) {
      cfg.x.push_back(r);
      cfg.y.push_back(r);
    }
    for (auto* v : {&cfg.x, &cfg.y}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    cfg.k_given = !ks.empty();
    if (cfg.k_given)
      cfg.ks = parse_orientation_list(ks);
    else if (cfg.command == "export")
      cfg.ks = {Orientation::Full};
    else
      cfg.ks = {Orientation::K1, Orientation::K2, Orientation::K3};
    const bool dot_ok = cfg.command == "export";
    if (cfg.format != "text" && cfg.format != "json" && !(dot_ok && cfg.format == "dot"))
      throw Error(Errc::BadParameter, "format '" + cfg.format + "' is not available for " + cfg.command);
    if (cfg.command == "export" && cfg.format == "text")
      cfg.format = "dot";
    specs = selected_specs(cfg, cfg.command == "orientations" ? nullptr : &skipped);
  } catch (const Error& e) {
    err << "hatq: " << e.what() << "\n";
    return 2;
  }
  if (cfg.jobs > 0)
    omp_set_num_threads(cfg.jobs);

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "hatq: cannot write " << cfg.out << "\n";
      return 2;
    }
  }
  std::ostream& sink = cfg.out.empty() ? out : file;

  if (cfg.command == "export") {
    Json all = Json::array();
    for (const auto& spec : specs) {
      const GGPair pair = build_pair(spec);
      if (cfg.format == "dot") {
        sink << to_dot(pair.graph, pair.name);
      } else {
        Json j = to_json(pair.graph);
        all.push_back({{"pair", pair.name}, {"graph", j}});
      }
    }
    if (cfg.format == "json")
      sink << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
    return 0;
  }

  // Work units in canonical order; results are assembled in that order
  // whatever order the threads finish in.
  struct Unit {
    std::string label;
    std::function<std::vector<Item>()> run;
  };
  std::vector<Unit> units;
  if (cfg.command == "orientations") {
    auto add = [&](Family f, const std::vector<int>& ps) {
      for (int p : ps)
        units.push_back({to_string(f) + "(" + std::to_string(p) + ")",
                         [&cfg, f, p] { return run_orientations(cfg, f, p); }});
    };
    add(Family::X, cfg.x);
    add(Family::Y, cfg.y);
    add(Family::Z, cfg.z);
  } else {
    for (const auto& spec : specs) {
      std::function<std::vector<Item>()> fn;
      if (cfg.command == "validate")
        fn = [spec] { return run_validate(spec); };
      else if (cfg.command == "tables")
        fn = [&cfg, spec] { return run_tables(cfg, spec); };
      else if (cfg.command == "quotient")
        fn = [&cfg, spec] { return run_quotient(cfg, spec); };
      else
        fn = [&cfg, spec] { return run_basic(cfg, spec); };
      units.push_back({spec.name(), std::move(fn)});
    }
  }

  std::vector<std::vector<Item>> results(units.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < units.size(); ++i) {
    try {
      results[i] = units[i].run();
    } catch (const std::exception& e) {
      Item it;
      it.name = units[i].label;
      it.ok = false;
      it.text = "error: " + error_text(e);
      it.json = {{"pair", units[i].label}, {"error", e.what()}};
      results[i] = {it};
    }
  }

  bool all_ok = true;
  std::size_t count = 0;
  Json items = Json::array();
  for (const auto& group : results)
    for (const auto& it : group) {
      all_ok = all_ok && it.ok;
      ++count;
      Json j = it.json;
      j["ok"] = it.ok;
      items.push_back(std::move(j));
      if (cfg.format == "text")
        sink << (it.ok ? "PASS " : "FAIL ") << it.name << ": " << it.text << "\n";
    }
  if (cfg.format == "json") {
    Json report;
    report["command"] = cfg.command + (cfg.which.empty() ? "" : " " + cfg.which);
    report["passed"] = all_ok;
    report["results"] = std::move(items);
    report["skipped"] = skipped;
    sink << report.dump(2) << "\n";
  } else {
    for (const auto& s : skipped)
      sink << "skip " << s << "\n";
    sink << count << " checks, " << (all_ok ? "all passed" : "some failed") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace hat
