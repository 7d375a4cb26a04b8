#pragma once

// Brute-force catalogue of the half-arc-transitive subgroups of a graph's
// full automorphism group and the edge-orientations they preserve.

#include <optional>
#include <string>
#include <vector>

#include "hat/families.hpp"

namespace hat {

struct HatSubgroup {
  PermGroup group;
  bool maximal = false;  // no proper half-arc-transitive overgroup in the list
};

/// Every subgroup of `aut` acting half-arc-transitively on `graph`
/// (orientation ignored). Throws CapExceeded when |aut| > cap.
std::vector<HatSubgroup> hat_subgroups(const OrientedGraph& graph, const PermGroup& aut,
                                       std::size_t cap = kDefaultSubgroupCap);

/// The orbit of the arc from vertex 0 to its least neighbour under h.
/// Throws NotHalfArcTransitive unless h is half-arc-transitive on graph.
std::vector<Arc> invariant_orientation(const OrientedGraph& graph, const PermGroup& h);

struct OrientationClass {
  std::vector<Arc> representative;
  /// Defined orientations ("k=1", "k=2", "k=3") in the class; empty when
  /// the class holds none of them.
  std::vector<std::string> labels;
  std::size_t subgroups = 0;  // HAT subgroups preserving an orientation of the class
};

struct HatCatalogue {
  std::string name;
  OrientedGraph graph;  // unoriented
  PermGroup aut;
  std::vector<HatSubgroup> hat;
  std::vector<PermGroup> maximal_up_to_conjugacy;
  std::vector<OrientationClass> classes;
};

/// Where the ambient group comes from: exhaustive automorphism search, or the
/// grid group (G(r), H(r), or the order 8s^2 group of Z(s)).
enum class AmbientGroup { Exhaustive, Grid };

/// Builds the graph of family f with parameter p and catalogues the HAT
/// subgroups of the ambient group.
HatCatalogue build_catalogue(Family f, int parameter, std::size_t cap = kDefaultSubgroupCap,
                             AmbientGroup ambient = AmbientGroup::Exhaustive);

struct TheoremCheck {
  bool passed = false;
  std::vector<std::string> checks;      // one line per assertion, "ok: ..." or "FAIL: ..."
  HatCatalogue catalogue;
};

/// Checks the catalogue against the defined orientations: class counts
/// (X 3, Z 1, Y with r odd 2), labels, maximal subgroups of X(r), stabilizer
/// conjugacy types, the forbidden arc-reversing elements, and for Y(r) that
/// the automorphism group equals the induced grid group.
TheoremCheck verify_orientation_theorem(Family f, int parameter,
                                        std::size_t cap = kDefaultSubgroupCap,
                                        AmbientGroup ambient = AmbientGroup::Exhaustive);

}  // namespace hat
