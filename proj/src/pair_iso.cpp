#include "hat/pair_iso.hpp"

#include <algorithm>
#include <map>

#include "hat/error.hpp"

namespace hat {

namespace {

// Relation of an ordered vertex pair (u, v).
enum : std::uint8_t { kNone = 0, kEdge = 1, kOut = 2, kIn = 3 };

struct Dense {
  const OrientedGraph* g = nullptr;
  std::size_t n = 0;
  std::vector<std::uint8_t> rel;
  std::uint8_t at(Point u, Point v) const { return rel[std::size_t{u} * n + v]; }
};

Dense make_dense(const OrientedGraph& g, bool oriented) {
  Dense d{&g, g.vertex_count(), std::vector<std::uint8_t>(g.vertex_count() * g.vertex_count(), kNone)};
  for (const Edge& e : g.edges()) {
    std::uint8_t uv = kEdge, vu = kEdge;
    if (oriented) {
      const bool fwd = g.is_arc(e.u, e.v);
      uv = fwd ? kOut : kIn;
      vu = fwd ? kIn : kOut;
    }
    d.rel[std::size_t{e.u} * d.n + e.v] = uv;
    d.rel[std::size_t{e.v} * d.n + e.u] = vu;
  }
  return d;
}

// Joint colour refinement of a and b; colours of b follow those of a.
std::vector<std::size_t> refine(const Dense& a, const Dense& b) {
  const std::size_t n = a.n + b.n;
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  for (;;) {
    std::map<std::pair<std::size_t, std::vector<std::pair<std::uint8_t, std::size_t>>>, std::size_t> ids;
    std::vector<std::pair<std::size_t, std::vector<std::pair<std::uint8_t, std::size_t>>>> sig(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Dense& d = x < a.n ? a : b;
      const std::size_t off = x < a.n ? 0 : a.n;
      const auto v = static_cast<Point>(x - off);
      sig[x].first = colour[x];
      for (Point w : d.g->neighbors(v))
        sig[x].second.push_back({d.at(v, w), colour[w + off]});
      std::sort(sig[x].second.begin(), sig[x].second.end());
      ids.emplace(sig[x], 0);
    }
    std::size_t next = 0;
    for (auto& [key, id] : ids)
      id = next++;
    for (std::size_t x = 0; x < n; ++x)
      colour[x] = ids.at(sig[x]);
    if (ids.size() == classes)
      return colour;
    classes = ids.size();
  }
}

class Search {
 public:
  Search(const OrientedGraph& a, const OrientedGraph& b, bool oriented,
         const std::function<bool(const VertexMap&)>& visit)
      : da_(make_dense(a, oriented)), db_(make_dense(b, oriented)), visit_(visit) {}

  void run(std::optional<Point> first_image) {
    const std::size_t n = da_.n;
    if (n != db_.n || da_.g->edge_count() != db_.g->edge_count())
      return;
    if (n == 0) {
      visit_({});
      return;
    }
    const auto colour = refine(da_, db_);
    std::vector<std::size_t> ha(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<std::size_t> hb(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
    colour_a_ = ha;
    colour_b_ = hb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb)
      return;

    // Breadth-first order of a, one component after another.
    std::vector<bool> seen(n, false);
    for (Point root = 0; root < n; ++root) {
      if (seen[root])
        continue;
      seen[root] = true;
      const std::size_t begin = order_.size();
      order_.push_back(root);
      parent_.push_back(std::nullopt);
      for (std::size_t h = begin; h < order_.size(); ++h)
        for (Point w : da_.g->neighbors(order_[h]))
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
            parent_.push_back(order_[h]);
          }
    }
    map_.assign(n, kUnset);
    inverse_.assign(n, kUnset);
    first_image_ = first_image;
    dfs(0);
  }

 private:
  static constexpr Point kUnset = static_cast<Point>(-1);

  bool feasible(Point v, Point c) const {
    if (inverse_[c] != kUnset || colour_a_[v] != colour_b_[c])
      return false;
    std::size_t mapped_a = 0, mapped_b = 0;
    for (Point w : da_.g->neighbors(v))
      if (map_[w] != kUnset) {
        ++mapped_a;
        if (db_.at(map_[w], c) != da_.at(w, v))
          return false;
      }
    for (Point w : db_.g->neighbors(c))
      mapped_b += inverse_[w] != kUnset;
    return mapped_a == mapped_b;
  }

  // Returns false to abort the whole search.
  bool dfs(std::size_t k) {
    if (k == order_.size())
      return visit_(map_);
    const Point v = order_[k];
    std::vector<Point> candidates;
    if (k == 0 && first_image_) {
      candidates.push_back(*first_image_);
    } else if (parent_[k]) {
      const auto nb = db_.g->neighbors(map_[*parent_[k]]);
      candidates.assign(nb.begin(), nb.end());
    } else {
      for (Point c = 0; c < db_.n; ++c)
        candidates.push_back(c);
    }
    for (Point c : candidates) {
      if (c >= db_.n || !feasible(v, c))
        continue;
      map_[v] = c;
      inverse_[c] = v;
      const bool go_on = dfs(k + 1);
      map_[v] = kUnset;
      inverse_[c] = kUnset;
      if (!go_on)
        return false;
    }
    return true;
  }

  Dense da_, db_;
  const std::function<bool(const VertexMap&)>& visit_;
  std::vector<std::size_t> colour_a_, colour_b_;
  std::vector<Point> order_;
  std::vector<std::optional<Point>> parent_;
  VertexMap map_, inverse_;
  std::optional<Point> first_image_;
};

}  // namespace

void for_each_isomorphism(const OrientedGraph& a, const OrientedGraph& b, bool use_orientation,
                          std::optional<Point> first_image,
                          const std::function<bool(const VertexMap&)>& visit) {
  if (use_orientation && (!a.has_orientation() || !b.has_orientation()))
    throw Error(Errc::NoOrientation, "orientation-preserving search needs two oriented graphs");
  Search(a, b, use_orientation, visit).run(first_image);
}

std::optional<VertexMap> oriented_graph_iso(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.has_orientation() != b.has_orientation())
    return std::nullopt;
  std::optional<VertexMap> found;
  for_each_isomorphism(a, b, a.has_orientation(), std::nullopt, [&](const VertexMap& f) {
    found = f;
    return false;
  });
  return found;
}

PermGroup automorphism_group(const OrientedGraph& g, bool use_orientation, std::size_t cap) {
  std::vector<Perm> elements;
  for_each_isomorphism(g, g, use_orientation, std::nullopt, [&](const VertexMap& f) {
    if (elements.size() == cap)
      throw Error(Errc::CapExceeded, "automorphism group exceeds the element cap");
    elements.emplace_back(f);
    return true;
  });
  std::sort(elements.begin(), elements.end());
  return PermGroup::from_elements(g.vertex_count(), std::move(elements));
}

Perm as_perm(const VertexMap& f) { return Perm(f); }

bool is_pair_isomorphism(const GGPair& p1, const GGPair& p2, const PairIsomorphism& iso) {
  const OrientedGraph& a = p1.graph;
  const OrientedGraph& b = p2.graph;
  if (iso.vertex_map.size() != a.vertex_count() || a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count() || p1.group.order() != p2.group.order())
    return false;
  const Perm f = as_perm(iso.vertex_map);
  for (const Edge& e : a.edges()) {
    if (!b.adjacent(f(e.u), f(e.v)))
      return false;
    if (a.has_orientation() && b.has_orientation() &&
        a.is_arc(e.u, e.v) != (b.is_arc(f(e.u), f(e.v)) != iso.reverses_orientation))
      return false;
  }
  const Perm finv = f.inverse();
  for (const Perm& g : p1.group.generators()) {
    const Perm phi = finv * g * f;
    if (!p2.group.contains(phi))
      return false;
    for (Point x = 0; x < a.vertex_count(); ++x)
      if (f(g(x)) != phi(f(x)))
        return false;
  }
  return true;
}

std::optional<PairIsomorphism> pair_iso(const GGPair& p1, const GGPair& p2) {
  const OrientedGraph& a = p1.graph;
  const OrientedGraph& b = p2.graph;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      p1.group.order() != p2.group.order() || a.has_orientation() != b.has_orientation())
    return std::nullopt;
  // If f works then so does f g for g in G2, so vertex 0 need only be sent to
  // one representative of each G2-orbit.
  std::vector<Point> anchors;
  for (const auto& block : orbits(p2.group).blocks)
    anchors.push_back(block.front());

  const bool oriented = a.has_orientation();
  std::optional<PairIsomorphism> found;
  for (const bool reversed : {false, true}) {
    if (reversed && !oriented)
      break;
    const OrientedGraph target = reversed ? b.reversed() : b;
    for (Point anchor : anchors) {
      for_each_isomorphism(a, target, oriented, anchor, [&](const VertexMap& f) {
        const Perm fp(f);
        const Perm finv = fp.inverse();
        for (const Perm& g : p1.group.generators())
          if (!p2.group.contains(finv * g * fp))
            return true;
        found = PairIsomorphism{f, reversed};
        return false;
      });
      if (found)
        return found;
    }
  }
  return std::nullopt;
}

std::vector<Arc> canonical_orientation(const PermGroup& aut, const std::vector<Arc>& arcs) {
  std::vector<Arc> best;
  std::vector<Arc> img(arcs.size());
  for (const Perm& g : aut.elements())
    for (const bool rev : {false, true}) {
      for (std::size_t i = 0; i < arcs.size(); ++i)
        img[i] = rev ? Arc{g(arcs[i].head), g(arcs[i].tail)} : Arc{g(arcs[i].tail), g(arcs[i].head)};
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best)
        best = img;
    }
  return best;
}

std::vector<std::vector<std::size_t>> orientation_classes(
    const OrientedGraph& graph, const PermGroup& aut,
    const std::vector<std::vector<Arc>>& orientations) {
  OrientedGraph probe = graph;
  std::map<std::vector<Arc>, std::size_t> class_of_key;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < orientations.size(); ++i) {
    probe.set_orientation(orientations[i]);
    auto key = canonical_orientation(aut, orientations[i]);
    auto [it, fresh] = class_of_key.emplace(std::move(key), classes.size());
    if (fresh)
      classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

}  // namespace hat
