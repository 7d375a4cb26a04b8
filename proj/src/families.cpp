#include "hat/families.hpp"

#include <algorithm>

#include "hat/error.hpp"

namespace hat {

namespace {

int mod(int a, int t) { return ((a % t) + t) % t; }

Perm grid_perm(int t, auto&& f) {
  std::vector<Point> images(static_cast<std::size_t>(t * t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      auto [ii, jj] = f(i, j);
      images[static_cast<std::size_t>(i * t + j)] = static_cast<Point>(mod(ii, t) * t + mod(jj, t));
    }
  return Perm(std::move(images));
}

Point vertex(int t, int i, int j) { return static_cast<Point>(mod(i, t) * t + mod(j, t)); }

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::X: return "X";
    case Family::Y: return "Y";
    case Family::Z: return "Z";
  }
  return "?";
}

std::string to_string(Orientation k) {
  return k == Orientation::Full ? "full" : std::to_string(static_cast<int>(k));
}

void FamilySpec::validate() const {
  if (parameter < 1)
    throw Error(Errc::BadParameter, "family parameter must be positive");
  if (family == Family::Z) {
    if (parameter < 3 || parameter % 2 == 0)
      throw Error(Errc::BadParameter, "Z(s) needs odd s >= 3");
    if (k != Orientation::K3 && k != Orientation::Full)
      throw Error(Errc::BadParameter, "Z(s) only carries the third orientation");
  }
  if (family == Family::Y && k == Orientation::K1 && parameter % 2 != 0)
    throw Error(Errc::BadParameter,
                "Y(r) with the first orientation needs even r: arcs of both directions join "
                "adjacent M(r)-orbits");
}

std::string FamilySpec::name() const {
  const std::string p = std::to_string(parameter);
  switch (family) {
    case Family::X:
      return "(X(" + p + "),G" + (k == Orientation::Full ? "" : "_" + to_string(k)) + "(" + p + "))";
    case Family::Y:
      return "(Y(" + p + "),H" + (k == Orientation::Full ? "" : "_" + to_string(k)) + "(" + p + "))";
    case Family::Z:
      return "(Z(" + p + ")," + (k == Orientation::Full ? "Aut" : "G_3Z(" + p + ")") + ")";
  }
  return "?";
}

GeneratorSet build_generators(int t) {
  if (t < 2)
    throw Error(Errc::BadParameter, "grid cycle length must be at least 2");
  GeneratorSet g;
  g.t = t;
  g.mu1 = grid_perm(t, [](int i, int j) { return std::pair{i + 1, j}; });
  g.mu2 = grid_perm(t, [](int i, int j) { return std::pair{i, j + 1}; });
  g.sigma1 = grid_perm(t, [](int i, int j) { return std::pair{-i, j}; });
  g.sigma2 = grid_perm(t, [](int i, int j) { return std::pair{i, -j}; });
  g.tau = grid_perm(t, [](int i, int j) { return std::pair{j, i}; });
  return g;
}

OrientedGraph grid_graph(int t) {
  if (t < 2)
    throw Error(Errc::BadParameter, "grid cycle length must be at least 2");
  std::vector<Edge> edges;
  std::vector<std::vector<Coordinate>> labels;
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      edges.push_back({vertex(t, i, j), vertex(t, i, j + 1)});
      edges.push_back({vertex(t, i, j), vertex(t, i + 1, j)});
      labels.push_back({{i, j}});
    }
  OrientedGraph g(static_cast<std::size_t>(t * t), edges);
  g.set_labels(std::move(labels));
  return g;
}

std::vector<Arc> grid_orientation(int t, Orientation k) {
  if (t < 3)
    throw Error(Errc::BadParameter, "orientations need cycle length at least 3");
  if ((k == Orientation::K1 || k == Orientation::K2) && t % 2 != 0)
    throw Error(Errc::BadParameter, "first and second orientations need even cycle length");
  if (k == Orientation::Full)
    throw Error(Errc::BadParameter, "the full group preserves no orientation");
  std::vector<Arc> arcs;
  auto add = [&](int i1, int j1, int i2, int j2, bool forward) {
    Point a = vertex(t, i1, j1), b = vertex(t, i2, j2);
    arcs.push_back(forward ? Arc{a, b} : Arc{b, a});
  };
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      // Horizontal edge (i,j)-(i,j+1) and vertical edge (i,j)-(i+1,j).
      switch (k) {
        case Orientation::K1:
          add(i, j, i, j + 1, i % 2 == 0);
          add(i, j, i + 1, j, j % 2 == 0);
          break;
        case Orientation::K2:
          add(i, j, i, j + 1, (i + j) % 2 == 0);
          add(i, j, i + 1, j, (i + j) % 2 != 0);
          break;
        case Orientation::K3:
          add(i, j, i, j + 1, true);
          add(i, j, i + 1, j, true);
          break;
        case Orientation::Full:
          break;
      }
    }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<Perm> grid_group_generators(const GeneratorSet& g, Orientation k) {
  switch (k) {
    case Orientation::Full:
      return {g.mu1, g.mu2, g.sigma1, g.sigma2, g.tau};
    case Orientation::K1:
      return {g.mu1 * g.sigma2, g.mu2 * g.sigma1, g.tau};
    case Orientation::K2:
      return {g.mu1 * g.mu2, g.mu1.pow(2), g.sigma1, g.sigma2, g.tau * g.mu1};
    case Orientation::K3:
      return {g.mu1, g.mu2, g.tau};
  }
  return {};
}

Perm project_to_cover(const Perm& p, const std::vector<Point>& cover_map, std::size_t blocks) {
  constexpr auto unset = static_cast<Point>(-1);
  std::vector<Point> images(blocks, unset);
  for (Point x = 0; x < cover_map.size(); ++x) {
    const Point b = cover_map[x], img = cover_map[p(x)];
    if (images[b] == unset)
      images[b] = img;
    else if (images[b] != img)
      throw Error(Errc::PartitionNotInvariant, "permutation does not respect the cover");
  }
  return Perm(std::move(images));
}

GGPair build_pair(const FamilySpec& spec) {
  spec.validate();
  const int t = spec.cycle_length();
  const bool degenerate = t == 2;

  if (spec.family == Family::Y) {
    GGPair x = build_pair({Family::X, spec.parameter, spec.k});
    const auto gens = build_generators(t);
    const PermGroup m_r(x.graph.vertex_count(), {(gens.mu1 * gens.mu2).pow(spec.parameter)});
    const BlockPartition blocks = orbits(m_r);
    BlockGraph q = block_graph(x.graph, blocks);
    if (x.graph.has_orientation() && !q.orientation_inherited)
      throw Error(Errc::BadParameter, "orientation is not inherited by " + spec.name());

    GGPair y;
    y.graph = std::move(q.graph);
    y.graph.set_degenerate(degenerate);
    y.group = kernel_and_quotient_action(x.group, blocks).induced;
    y.spec = spec;
    y.name = spec.name();
    y.cover_map.assign(blocks.block_of.begin(), blocks.block_of.end());
    return y;
  }

  const auto gens = build_generators(t);
  GGPair pair;
  pair.graph = grid_graph(t);
  pair.graph.set_degenerate(degenerate);
  if (spec.k != Orientation::Full && !degenerate)
    pair.graph.set_orientation(grid_orientation(t, spec.k));
  pair.group = PermGroup(pair.graph.vertex_count(), grid_group_generators(gens, spec.k));
  pair.spec = spec;
  pair.name = spec.name();
  return pair;
}

GGPair with_orientation(const GGPair& pair, const std::vector<Arc>& arcs) {
  GGPair out = pair;
  out.graph.set_orientation(arcs);
  return out;
}

std::string NamedSubgroupSpec::name() const {
  std::string base;
  switch (kind) {
    case SubgroupKind::N: base = "N(" + std::to_string(divisor) + ")"; break;
    case SubgroupKind::M: base = "M(" + std::to_string(divisor) + ")"; break;
    case SubgroupKind::N2Plus: base = "N(2,+)"; break;
    case SubgroupKind::J: base = "J"; break;
    case SubgroupKind::K: base = "K"; break;
    case SubgroupKind::JPlus: base = "J(+)"; break;
    case SubgroupKind::KPlus: base = "K(+)"; break;
  }
  return barred ? "bar " + base : base;
}

std::vector<Perm> named_subgroup_words(const GeneratorSet& g, const NamedSubgroupSpec& spec) {
  const int t = g.t;
  const int a = spec.divisor;
  const bool even = t % 2 == 0;
  switch (spec.kind) {
    case SubgroupKind::N:
      if (a < 1 || t % a != 0)
        throw Error(Errc::BadParameter, "N(a) needs a | t");
      return {g.mu1.pow(a), g.mu2.pow(a)};
    case SubgroupKind::M:
      if (a < 1 || t % (2 * a) != 0)
        throw Error(Errc::BadParameter, "M(a) needs 2a | t");
      return {(g.mu1 * g.mu2).pow(a), g.mu1.pow(2 * a)};
    case SubgroupKind::N2Plus:
      if (!even)
        throw Error(Errc::BadParameter, "N(2,+) needs t = 2r");
      return {g.mu1.pow(2), g.mu2.pow(2), g.sigma1, g.sigma2};
    case SubgroupKind::J:
      return {g.mu1 * g.mu2};
    case SubgroupKind::K:
      return {g.mu1 * g.mu2.inverse(), g.tau};
    case SubgroupKind::JPlus:
      if (!even)
        throw Error(Errc::BadParameter, "J(+) needs t = 2r");
      return {g.mu1 * g.mu2, g.mu1.pow(t / 2)};
    case SubgroupKind::KPlus:
      if (!even)
        throw Error(Errc::BadParameter, "K(+) needs t = 2r");
      return {g.mu1 * g.mu2.inverse(), g.tau, g.mu1.pow(t / 2)};
  }
  return {};
}

PermGroup named_subgroup(const GGPair& pair, const NamedSubgroupSpec& spec) {
  if (!pair.spec)
    throw Error(Errc::BadParameter, "named subgroups need a family pair");
  const bool is_y = pair.spec->family == Family::Y;
  if (spec.barred != is_y)
    throw Error(Errc::BadParameter, spec.barred ? "barred subgroups live in Y pairs"
                                                : "Y pairs take barred subgroups");
  const auto gens = build_generators(pair.spec->cycle_length());
  std::vector<Perm> words = named_subgroup_words(gens, spec);
  if (is_y)
    for (auto& w : words)
      w = project_to_cover(w, pair.cover_map, pair.graph.vertex_count());
  for (const auto& w : words)
    if (!pair.group.contains(w))
      throw Error(Errc::NotContained, spec.name() + " is not contained in the group of " + pair.name);
  return PermGroup(pair.graph.vertex_count(), std::move(words));
}

}  // namespace hat
