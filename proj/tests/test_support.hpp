#pragma once
// Naive reference implementations used as oracles by the tests. They work on
// std::set<Perm> and never touch GroupTable or the library's closure code.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "hat/graph.hpp"
#include "hat/perm.hpp"

namespace hat::testing {

inline std::set<Perm> naive_closure(std::size_t degree, const std::vector<Perm>& gens) {
  std::set<Perm> out{Perm::identity(degree)};
  std::vector<Perm> todo{Perm::identity(degree)};
  while (!todo.empty()) {
    Perm x = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm y = x * g;
      if (out.insert(y).second)
        todo.push_back(y);
    }
  }
  return out;
}

/// Every subgroup generated by at most two elements.
inline std::set<std::set<Perm>> naive_two_generated_subgroups(std::size_t degree,
                                                              const std::set<Perm>& group) {
  std::set<std::set<Perm>> out;
  const std::vector<Perm> elems(group.begin(), group.end());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      out.insert(naive_closure(degree, {elems[i], elems[j]}));
  return out;
}

inline bool naive_is_normal(const std::set<Perm>& sub, const std::set<Perm>& group) {
  for (const auto& g : group)
    for (const auto& h : sub)
      if (!sub.count(g.inverse() * h * g))
        return false;
  return true;
}

inline Perm random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

inline std::set<Perm> as_set(const std::vector<Perm>& v) { return {v.begin(), v.end()}; }

/// Alternating cycles as vertex sets, found by pairing edges instead of
/// walking: at each vertex the two in-arcs are partners and so are the two
/// out-arcs, and the cycles are the connected classes of that relation.
struct NaiveCycles {
  std::vector<std::set<Point>> vertex_sets;
  std::vector<std::size_t> lengths;  // edges per cycle
};

inline NaiveCycles naive_alternating_cycles(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<std::size_t> parent(arcs.size());
  for (std::size_t i = 0; i < parent.size(); ++i)
    parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::size_t>> in(n), out(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out[arcs[i].tail].push_back(i);
    in[arcs[i].head].push_back(i);
  }
  for (std::size_t v = 0; v < n; ++v)
    for (const auto* side : {&in[v], &out[v]})
      for (std::size_t j = 1; j < side->size(); ++j)
        parent[find((*side)[0])] = find((*side)[j]);
  std::map<std::size_t, std::size_t> index;
  NaiveCycles c;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [it, fresh] = index.emplace(find(i), c.lengths.size());
    if (fresh) {
      c.vertex_sets.emplace_back();
      c.lengths.push_back(0);
    }
    c.vertex_sets[it->second].insert(arcs[i].tail);
    c.vertex_sets[it->second].insert(arcs[i].head);
    ++c.lengths[it->second];
  }
  return c;
}

/// Distinct sizes of nonempty pairwise intersections.
inline std::set<std::size_t> naive_attachment_sizes(const NaiveCycles& c) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < c.vertex_sets.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertex_sets.size(); ++j) {
      std::size_t k = 0;
      for (Point v : c.vertex_sets[i])
        k += c.vertex_sets[j].count(v);
      if (k)
        out.insert(k);
    }
  return out;
}

}  // namespace hat::testing
