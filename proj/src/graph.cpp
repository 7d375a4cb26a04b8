#include "hat/graph.hpp"

#include <algorithm>
#include <map>

#include "hat/error.hpp"

namespace hat {

namespace {

std::uint64_t edge_key(Point u, Point v) {
  if (u > v)
    std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

}  // namespace

OrientedGraph::OrientedGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw Error(Errc::PointOutOfRange, "edge endpoint outside the vertex set");
    if (e.u == e.v)
      throw Error(Errc::BadParameter, "loops are not allowed");
    if (e.u > e.v)
      std::swap(e.u, e.v);
    norm.push_back(e);
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  edges_ = std::move(norm);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    edge_lookup_.emplace(edge_key(u, v), i);
  }
  for (auto& nbrs : adjacency_)
    std::sort(nbrs.begin(), nbrs.end());
}

std::optional<std::size_t> OrientedGraph::edge_index(Point u, Point v) const {
  auto it = edge_lookup_.find(edge_key(u, v));
  if (it == edge_lookup_.end())
    return std::nullopt;
  return it->second;
}

void OrientedGraph::set_orientation(std::span<const Arc> arcs) {
  std::vector<bool> forward(edges_.size(), false);
  std::vector<bool> seen(edges_.size(), false);
  for (const Arc& a : arcs) {
    auto e = edge_index(a.tail, a.head);
    if (!e)
      throw Error(Errc::InvalidOrientation, "arc " + std::to_string(a.tail) + "->" +
                                                std::to_string(a.head) + " is not an edge");
    if (seen[*e])
      throw Error(Errc::InvalidOrientation, "edge " + std::to_string(a.tail) + "-" +
                                                std::to_string(a.head) + " carries two arcs");
    seen[*e] = true;
    forward[*e] = a.tail < a.head;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(Errc::InvalidOrientation, "some edge carries no arc");
  forward_ = std::move(forward);
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  if (!has_orientation())
    return out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    out.push_back(forward_[i] ? Arc{edges_[i].u, edges_[i].v} : Arc{edges_[i].v, edges_[i].u});
  std::sort(out.begin(), out.end());
  return out;
}

bool OrientedGraph::is_arc(Point u, Point v) const {
  if (!has_orientation())
    throw Error(Errc::NoOrientation, "graph carries no orientation");
  auto e = edge_index(u, v);
  if (!e)
    return false;
  return forward_[*e] == (u < v);
}

std::vector<Point> OrientedGraph::out_neighbors(Point v) const {
  std::vector<Point> out;
  for (Point w : adjacency_[v])
    if (is_arc(v, w))
      out.push_back(w);
  return out;
}

std::vector<Point> OrientedGraph::in_neighbors(Point v) const {
  std::vector<Point> out;
  for (Point w : adjacency_[v])
    if (is_arc(w, v))
      out.push_back(w);
  return out;
}

OrientedGraph OrientedGraph::reversed() const {
  OrientedGraph out = *this;
  out.forward_.flip();
  return out;
}

bool is_connected(const OrientedGraph& g) {
  if (g.vertex_count() == 0)
    return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Point> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Point w : g.neighbors(queue[head]))
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  return queue.size() == g.vertex_count();
}

bool is_regular_of_valency(const OrientedGraph& g, std::size_t valency) {
  for (Point v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(v).size() != valency)
      return false;
  return true;
}

bool preserves_edges(const OrientedGraph& g, const Perm& p) {
  if (p.degree() != g.vertex_count())
    return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.adjacent(p(e.u), p(e.v)); });
}

bool preserves_orientation(const OrientedGraph& g, const Perm& p) {
  if (!g.has_orientation())
    throw Error(Errc::NoOrientation, "graph carries no orientation");
  if (!preserves_edges(g, p))
    return false;
  for (const Arc& a : g.arcs())
    if (!g.is_arc(p(a.tail), p(a.head)))
      return false;
  return true;
}

std::vector<Arc> reverse_arcs(std::span<const Arc> arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const Arc& a : arcs)
    out.push_back({a.head, a.tail});
  std::sort(out.begin(), out.end());
  return out;
}

BlockGraph block_graph(const OrientedGraph& g, const BlockPartition& partition) {
  if (partition.degree() != g.vertex_count())
    throw Error(Errc::DomainMismatch, "partition and graph differ in size");
  BlockGraph out;
  // Direction votes per block pair: bit 0 = some arc lo->hi, bit 1 = some arc hi->lo.
  std::map<std::pair<std::size_t, std::size_t>, int> votes;
  for (const Edge& e : g.edges()) {
    const auto bu = partition.block_of[e.u], bv = partition.block_of[e.v];
    if (bu == bv) {
      out.intra_block_edges = true;
      continue;
    }
    const auto key = std::minmax(bu, bv);
    int& vote = votes[{key.first, key.second}];
    if (g.has_orientation()) {
      const bool u_to_v = g.is_arc(e.u, e.v);
      const bool lo_to_hi = (bu < bv) == u_to_v;
      vote |= lo_to_hi ? 1 : 2;
    }
  }
  std::vector<Edge> qedges;
  for (const auto& [key, vote] : votes)
    qedges.push_back({static_cast<Point>(key.first), static_cast<Point>(key.second)});
  out.graph = OrientedGraph(partition.size(), qedges);
  if (!g.labels().empty()) {
    std::vector<std::vector<Coordinate>> labels(partition.size());
    for (std::size_t b = 0; b < partition.size(); ++b)
      for (Point x : partition.blocks[b])
        labels[b].insert(labels[b].end(), g.labels()[x].begin(), g.labels()[x].end());
    out.graph.set_labels(std::move(labels));
  }

  if (g.has_orientation()) {
    bool consistent = true;
    std::vector<Arc> arcs;
    for (const auto& [key, vote] : votes) {
      if (vote == 3) {
        consistent = false;
        break;
      }
      const auto lo = static_cast<Point>(key.first), hi = static_cast<Point>(key.second);
      arcs.push_back(vote == 1 ? Arc{lo, hi} : Arc{hi, lo});
    }
    if (consistent) {
      out.graph.set_orientation(arcs);
      out.orientation_inherited = true;
    }
  }

  bool cover = !out.intra_block_edges;
  for (Point x = 0; x < g.vertex_count() && cover; ++x) {
    std::map<std::size_t, int> hits;
    for (Point w : g.neighbors(x))
      ++hits[partition.block_of[w]];
    for (const auto& [block, count] : hits)
      if (count != 1)
        cover = false;
  }
  out.cover = cover;
  return out;
}

}  // namespace hat
