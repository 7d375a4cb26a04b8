#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hat/perm.hpp"
#include "hat/perm_group.hpp"

namespace hat {

struct Arc {
  Point tail = 0;
  Point head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Undirected edge with u < v.
struct Edge {
  Point u = 0;
  Point v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Coordinate = std::pair<int, int>;

/// Simple undirected graph with an optional edge-orientation (one arc per
/// edge) and optional coordinate labels per vertex.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  /// Parallel edges are merged; loops are rejected with BadParameter.
  OrientedGraph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Point> neighbors(Point v) const { return adjacency_[v]; }
  std::optional<std::size_t> edge_index(Point u, Point v) const;
  bool adjacent(Point u, Point v) const { return edge_index(u, v).has_value(); }

  bool has_orientation() const noexcept { return !forward_.empty(); }
  /// Throws InvalidOrientation unless `arcs` holds exactly one arc per edge.
  void set_orientation(std::span<const Arc> arcs);
  void clear_orientation() { forward_.clear(); }
  /// Sorted arc list; empty when unoriented.
  std::vector<Arc> arcs() const;
  /// True when u -> v is an arc of the orientation.
  bool is_arc(Point u, Point v) const;
  std::vector<Point> out_neighbors(Point v) const;
  std::vector<Point> in_neighbors(Point v) const;
  OrientedGraph reversed() const;

  const std::vector<std::vector<Coordinate>>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::vector<Coordinate>> labels) { labels_ = std::move(labels); }

  bool degenerate() const noexcept { return degenerate_; }
  void set_degenerate(bool d) noexcept { degenerate_ = d; }

 private:
  std::vector<std::vector<Point>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> edge_lookup_;
  std::vector<bool> forward_;  // per edge: arc is u -> v
  std::vector<std::vector<Coordinate>> labels_;
  bool degenerate_ = false;
};

bool is_connected(const OrientedGraph& g);
bool is_regular_of_valency(const OrientedGraph& g, std::size_t valency);

/// The permutation maps edges onto edges.
bool preserves_edges(const OrientedGraph& g, const Perm& p);
/// The permutation maps the arc set onto itself (requires an orientation).
bool preserves_orientation(const OrientedGraph& g, const Perm& p);

/// Arc set with every arc reversed.
std::vector<Arc> reverse_arcs(std::span<const Arc> arcs);

struct BlockGraph {
  OrientedGraph graph;          // vertices are blocks
  bool orientation_inherited = false;
  bool intra_block_edges = false;
  /// Every vertex has exactly one neighbour in each block adjacent to its own.
  bool cover = false;
};

/// Graph on the blocks of `partition`, blocks adjacent when joined by an edge.
/// The orientation is inherited all-or-nothing: only when every pair of
/// adjacent blocks is joined by arcs pointing one way.
BlockGraph block_graph(const OrientedGraph& g, const BlockPartition& partition);

}  // namespace hat
