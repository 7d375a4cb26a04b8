#pragma once

/**
 * @file families.hpp
 * @brief The torus grid families X(r), Y(r), Z(s) with their orientations and
 *        acting groups.
 *
 * X(r) is C_{2r} x C_{2r} on Z_{2r} x Z_{2r}, Z(s) is C_s x C_s for odd s, and
 * Y(r) is X(r) modulo the orbits of M(r) = <(mu1 mu2)^r>. Grid vertex (i, j)
 * has index i*t + j; rows i grow downwards and columns j to the right.
 *
 * Generators on the t x t grid:
 *   mu1:    (i, j) -> (i+1, j)      mu2:    (i, j) -> (i, j+1)
 *   sigma1: (i, j) -> (-i, j)       sigma2: (i, j) -> (i, -j)
 *   tau:    (i, j) -> (j, i)
 *
 * Acting groups:
 *   full  <mu1, mu2, sigma1, sigma2, tau>          order 32 r^2 (8 s^2 on Z)
 *   k=1   <mu1 sigma2, mu2 sigma1, tau>            order  8 r^2
 *   k=2   <mu1 mu2, mu1^2, sigma1, sigma2, tau mu1> order 16 r^2
 *   k=3   <mu1, mu2, tau>                          order  8 r^2 (2 s^2 on Z)
 */

#include <optional>
#include <string>
#include <vector>

#include "hat/graph.hpp"
#include "hat/perm_group.hpp"

namespace hat {

enum class Family { X, Y, Z };

/// Which edge-orientation / acting group; Full is the unoriented pair with
/// the whole grid automorphism group.
enum class Orientation { Full = 0, K1 = 1, K2 = 2, K3 = 3 };

struct FamilySpec {
  Family family = Family::X;
  int parameter = 2;
  Orientation k = Orientation::K3;

  /// Cycle length t of the underlying grid: 2r for X and Y, s for Z.
  int cycle_length() const noexcept { return family == Family::Z ? parameter : 2 * parameter; }
  /// Throws BadParameter on invalid combinations.
  void validate() const;
  /// e.g. "(X(3),G_2(3))", "(Y(2),H(2))", "(Z(5),G_3Z(5))".
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

std::string to_string(Family f);
std::string to_string(Orientation k);

struct GeneratorSet {
  int t = 0;
  Perm mu1, mu2, sigma1, sigma2, tau;
};

/// Throws BadParameter for t < 2.
GeneratorSet build_generators(int t);

/// C_t x C_t with (i, j) labels. For t = 2 this is C_4.
OrientedGraph grid_graph(int t);

/// Arc set of orientation k on the t x t grid. K1 and K2 need even t; all
/// need t >= 3. Throws BadParameter otherwise.
std::vector<Arc> grid_orientation(int t, Orientation k);

/// Generators of the acting group for orientation k on the t x t grid.
std::vector<Perm> grid_group_generators(const GeneratorSet& gens, Orientation k);

/// A graph together with an acting group, the pair (Gamma, G).
struct GGPair {
  OrientedGraph graph;
  PermGroup group;
  std::optional<FamilySpec> spec;
  std::string name;
  /// For Y pairs: vertex of X(r) -> vertex of Y(r). Empty otherwise.
  std::vector<Point> cover_map;
};

/// Throws BadParameter on invalid specs, including Y with k=1 and odd r.
GGPair build_pair(const FamilySpec& spec);

/// The same group acting on the same graph with a different orientation.
GGPair with_orientation(const GGPair& pair, const std::vector<Arc>& arcs);

enum class SubgroupKind { N, M, N2Plus, J, K, JPlus, KPlus };

struct NamedSubgroupSpec {
  SubgroupKind kind = SubgroupKind::N;
  int divisor = 0;     // a, for N(a) and M(a)
  bool barred = false; // project to the block action on Y(r)

  std::string name() const;
};

/// Generators, as words in the grid generators, of the unbarred subgroup.
std::vector<Perm> named_subgroup_words(const GeneratorSet& gens, const NamedSubgroupSpec& spec);

/// The named subgroup inside pair.group. Barred specs require a Y pair and
/// unbarred specs an X or Z pair (BadParameter otherwise). Throws
/// NotContained when the subgroup is not inside the pair's group.
PermGroup named_subgroup(const GGPair& pair, const NamedSubgroupSpec& spec);

/// Projects a permutation of X(r) to Y(r) along the cover map.
Perm project_to_cover(const Perm& p, const std::vector<Point>& cover_map, std::size_t blocks);

}  // namespace hat
