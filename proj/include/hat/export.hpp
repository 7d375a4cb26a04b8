#pragma once

// JSON and DOT serialization of graphs and reports. Key order and list order
// are fixed, so equal inputs give byte-identical output.

#include <string>

#include "json.hpp"

#include "hat/basicness.hpp"
#include "hat/og4.hpp"
#include "hat/orientations.hpp"
#include "hat/tables.hpp"

namespace hat {

using Json = nlohmann::ordered_json;

/// Image array.
Json to_json(const Perm& p);
/// {vertices, edges, arcs, labels}; arcs is empty when unoriented.
Json to_json(const OrientedGraph& g);
Json to_json(const Og4Report& r);
/// {radius, attachment, type, tie, cycle_count, cycle_length}
Json to_json(const AltCycleReport& r);
/// {row, params, status, subgroup, expected, observed, detail?, witness?}
Json to_json(const RowVerdict& v);
Json to_json(const QuotientClass& c);
/// {pair, basic, type?, witnesses: [{subgroup_name?, order, quotient_class}]}
Json basic_json(const GGPair& pair, const BasicVerdict& v);
Json to_json(const HatCatalogue& c);

/// Name of a normal subgroup of pair.group among the named subgroups of the
/// family, when one matches.
std::optional<std::string> find_subgroup_name(const GGPair& pair, const PermGroup& n);

/// Undirected graph, or a digraph with one edge per arc when oriented.
/// Labelled vertices carry their grid coordinates.
std::string to_dot(const OrientedGraph& g, const std::string& name);

}  // namespace hat
