#include "hat/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "hat/error.hpp"
#include "hat/group_table.hpp"

namespace hat {

struct PermGroup::Data {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t, PermHash> index;
};

namespace {

void check_degrees(std::size_t degree, std::span<const Perm> generators) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(Errc::DomainMismatch, "generator degree " + std::to_string(g.degree()) +
                                            " differs from domain size " + std::to_string(degree));
}

// Greedy generating set: walk the sorted elements and keep those outside the
// closure of the ones kept so far.
std::vector<Perm> pick_generators(std::size_t degree, const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> closure{Perm::identity(degree)};
  for (const auto& e : elements) {
    if (closure.contains(e))
      continue;
    gens.push_back(e);
    std::vector<Perm> queue(closure.begin(), closure.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : gens) {
        Perm p = queue[head] * g;
        if (closure.insert(p).second)
          queue.push_back(std::move(p));
      }
    }
  }
  return gens;
}

}  // namespace

std::vector<Perm> enumerate_elements(std::size_t degree, std::span<const Perm> generators,
                                     std::size_t cap) {
  check_degrees(degree, generators);
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue{Perm::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      Perm p = queue[head] * g;
      if (seen.insert(p).second) {
        if (seen.size() > cap)
          throw Error(Errc::CapExceeded, "group has more than " + std::to_string(cap) + " elements");
        queue.push_back(std::move(p));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

PermGroup::PermGroup() : PermGroup(0, {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t cap) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->elements = enumerate_elements(degree, generators, cap);
  d->generators = std::move(generators);
  for (std::size_t i = 0; i < d->elements.size(); ++i)
    d->index.emplace(d->elements[i], i);
  d_ = std::move(d);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::from_elements(std::size_t degree, std::vector<Perm> elements,
                                   std::vector<Perm> generators) {
  check_degrees(degree, elements);
  auto d = std::make_shared<Data>();
  d->degree = degree;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (generators.empty())
    generators = pick_generators(degree, elements);
  d->generators = std::move(generators);
  d->elements = std::move(elements);
  for (std::size_t i = 0; i < d->elements.size(); ++i)
    d->index.emplace(d->elements[i], i);
  return PermGroup(std::shared_ptr<const Data>(std::move(d)));
}

std::size_t PermGroup::degree() const noexcept { return d_->degree; }
std::size_t PermGroup::order() const noexcept { return d_->elements.size(); }
const std::vector<Perm>& PermGroup::generators() const noexcept { return d_->generators; }
const std::vector<Perm>& PermGroup::elements() const noexcept { return d_->elements; }
bool PermGroup::contains(const Perm& p) const { return d_->index.contains(p); }

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = d_->index.find(p);
  if (it == d_->index.end())
    return std::nullopt;
  return it->second;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree() != other.degree() || other.order() % order() != 0)
    return false;
  return std::all_of(generators().begin(), generators().end(),
                     [&](const Perm& g) { return other.contains(g); });
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.d_ == b.d_ || (a.degree() == b.degree() && a.elements() == b.elements());
}

// ---------------------------------------------------------------------------

BlockPartition BlockPartition::from_labels(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::vector<Point>> by_label;
  for (std::size_t x = 0; x < labels.size(); ++x)
    by_label[labels[x]].push_back(static_cast<Point>(x));
  BlockPartition out;
  for (auto& [label, block] : by_label)
    out.blocks.push_back(std::move(block));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.block_of.assign(labels.size(), 0);
  for (std::size_t b = 0; b < out.blocks.size(); ++b)
    for (Point x : out.blocks[b])
      out.block_of[x] = b;
  return out;
}

BlockPartition BlockPartition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(labels);
}

bool BlockPartition::is_valid() const {
  std::vector<int> hits(block_of.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      return false;
    for (Point x : blocks[b]) {
      if (x >= block_of.size() || block_of[x] != b)
        return false;
      ++hits[x];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::vector<Point> orbit(const PermGroup& group, Point x) {
  if (x >= group.degree())
    throw Error(Errc::PointOutOfRange, "point " + std::to_string(x) + " outside the domain");
  std::vector<bool> seen(group.degree(), false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& g : group.generators()) {
      Point y = g(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

BlockPartition orbits_of(std::size_t degree, std::span<const Perm> generators) {
  check_degrees(degree, generators);
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(degree, unset);
  std::size_t next = 0;
  for (Point x = 0; x < degree; ++x) {
    if (label[x] != unset)
      continue;
    std::vector<Point> queue{x};
    label[x] = next;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& g : generators) {
        Point y = g(queue[head]);
        if (label[y] == unset) {
          label[y] = next;
          queue.push_back(y);
        }
      }
    ++next;
  }
  return BlockPartition::from_labels(label);
}

BlockPartition orbits(const PermGroup& group) {
  return orbits_of(group.degree(), group.generators());
}

ActionProfile action_profile(const PermGroup& group) {
  ActionProfile prof;
  for (const auto& block : orbits(group).blocks)
    prof.orbit_sizes.push_back(block.size());
  std::sort(prof.orbit_sizes.begin(), prof.orbit_sizes.end());
  prof.transitive = prof.orbit_sizes.size() == 1;
  prof.semiregular = std::all_of(group.elements().begin(), group.elements().end(),
                                 [](const Perm& g) {
                                   return g.is_identity() || g.fixed_point_count() == 0;
                                 });
  prof.regular = prof.transitive && prof.semiregular;
  return prof;
}

PermGroup stabilizer(const PermGroup& group, Point x) {
  if (x >= group.degree())
    throw Error(Errc::PointOutOfRange, "point " + std::to_string(x) + " outside the domain");
  std::vector<Perm> fixing;
  for (const auto& g : group.elements())
    if (g(x) == x)
      fixing.push_back(g);
  return PermGroup::from_elements(group.degree(), std::move(fixing));
}

bool is_normal(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree())
    throw Error(Errc::DomainMismatch, "subgroup and group act on different domains");
  for (const auto& s : sub.generators())
    if (!group.contains(s))
      throw Error(Errc::NotASubgroup, "generator " + to_cycle_string(s) + " not in group");
  for (const auto& g : group.generators())
    for (const auto& s : sub.elements())
      if (!sub.contains(s.conjugate_by(g)))
        return false;
  return true;
}

PermGroup centralizer(const PermGroup& group, const PermGroup& sub) {
  std::vector<Perm> out;
  for (const auto& g : group.elements()) {
    bool commutes = std::all_of(sub.generators().begin(), sub.generators().end(),
                                [&](const Perm& h) { return g * h == h * g; });
    if (commutes)
      out.push_back(g);
  }
  return PermGroup::from_elements(group.degree(), std::move(out));
}

PermGroup conjugate(const PermGroup& h, const Perm& g) {
  std::vector<Perm> elems, gens;
  for (const auto& x : h.elements())
    elems.push_back(x.conjugate_by(g));
  for (const auto& x : h.generators())
    gens.push_back(x.conjugate_by(g));
  return PermGroup::from_elements(h.degree(), std::move(elems), std::move(gens));
}

std::optional<Perm> conjugating_element(const PermGroup& a, const PermGroup& b,
                                        const PermGroup& ambient) {
  if (a.order() != b.order())
    return std::nullopt;
  for (const auto& g : ambient.elements()) {
    bool ok = std::all_of(a.generators().begin(), a.generators().end(),
                          [&](const Perm& x) { return b.contains(x.conjugate_by(g)); });
    if (ok)
      return g;
  }
  return std::nullopt;
}

Perm induced_on_blocks(const Perm& p, const BlockPartition& partition) {
  if (p.degree() != partition.degree())
    throw Error(Errc::DomainMismatch, "permutation and partition differ in degree");
  std::vector<Point> images(partition.size());
  std::vector<bool> hit(partition.size(), false);
  for (std::size_t b = 0; b < partition.size(); ++b) {
    const auto& block = partition.blocks[b];
    const std::size_t target = partition.block_of[p(block.front())];
    for (Point x : block)
      if (partition.block_of[p(x)] != target)
        throw Error(Errc::PartitionNotInvariant, "a block is split by the permutation");
    if (hit[target] || partition.blocks[target].size() != block.size())
      throw Error(Errc::PartitionNotInvariant, "blocks are not permuted bijectively");
    hit[target] = true;
    images[b] = static_cast<Point>(target);
  }
  return Perm(std::move(images));
}

QuotientAction kernel_and_quotient_action(const PermGroup& group,
                                          const BlockPartition& partition) {
  std::vector<Perm> induced_gens;
  for (const auto& g : group.generators())
    induced_gens.push_back(induced_on_blocks(g, partition));
  std::vector<Perm> kernel;
  for (const auto& g : group.elements()) {
    bool fixes_all = true;
    for (Point x = 0; x < g.degree() && fixes_all; ++x)
      fixes_all = partition.block_of[g(x)] == partition.block_of[x];
    if (fixes_all)
      kernel.push_back(g);
  }
  return {PermGroup::from_elements(group.degree(), std::move(kernel)),
          PermGroup(partition.size(), std::move(induced_gens))};
}

// ---------------------------------------------------------------------------
// Subgroup lattices.

namespace {

std::vector<PermGroup> materialize(const GroupTable& table, std::vector<IndexedSubgroup> subs) {
  std::sort(subs.begin(), subs.end(), [](const IndexedSubgroup& a, const IndexedSubgroup& b) {
    const auto ca = a.elements.count(), cb = b.elements.count();
    if (ca != cb)
      return ca < cb;
    return a.elements < b.elements;
  });
  std::vector<PermGroup> out;
  out.reserve(subs.size());
  for (const auto& s : subs)
    out.push_back(table.to_group(s));
  return out;
}

template <bool Parallel>
std::vector<PermGroup> all_subgroups_impl(const PermGroup& group, std::size_t cap) {
  if (group.order() > cap)
    throw Error(Errc::CapExceeded, "subgroup lattice requested for group of order " +
                                       std::to_string(group.order()) + " > cap " +
                                       std::to_string(cap));
  const GroupTable table = Parallel ? GroupTable(group) : GroupTable::build_serial(group);
  const auto n = static_cast<ElemIndex>(table.order());

  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<IndexedSubgroup> all;
  std::vector<ElemIndex> cyclic_reps;
  for (ElemIndex x = 0; x < n; ++x) {
    const ElemIndex gen[] = {x};
    auto c = table.closure(gen);
    if (known.insert(c.elements).second) {
      all.push_back(std::move(c));
      if (x != table.identity())
        cyclic_reps.push_back(x);
    }
  }

  // Every subgroup is reached by a chain of joins with cyclic subgroups.
  std::vector<std::size_t> frontier(all.size());
  std::iota(frontier.begin(), frontier.end(), std::size_t{0});
  while (!frontier.empty()) {
    std::vector<std::vector<IndexedSubgroup>> found(frontier.size());
    const auto count = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 4) if (Parallel)
    for (long long i = 0; i < count; ++i) {
      const IndexedSubgroup& h = all[frontier[static_cast<std::size_t>(i)]];
      std::unordered_set<ElementSet, ElementSetHash> local;
      auto& bucket = found[static_cast<std::size_t>(i)];
      for (ElemIndex x : cyclic_reps) {
        if (h.elements.test(x))
          continue;
        const ElemIndex extra[] = {x};
        auto j = table.extend(h, extra);
        if (!known.contains(j.elements) && local.insert(j.elements).second)
          bucket.push_back(std::move(j));
      }
    }
    std::vector<std::size_t> next;
    for (auto& bucket : found)
      for (auto& j : bucket)
        if (known.insert(j.elements).second) {
          next.push_back(all.size());
          all.push_back(std::move(j));
        }
    frontier = std::move(next);
  }
  return materialize(table, std::move(all));
}

}  // namespace

std::vector<PermGroup> all_subgroups(const PermGroup& group, std::size_t cap) {
  return all_subgroups_impl<true>(group, cap);
}

std::vector<PermGroup> all_subgroups_serial(const PermGroup& group, std::size_t cap) {
  return all_subgroups_impl<false>(group, cap);
}

std::vector<PermGroup> normal_subgroups(const PermGroup& group, std::size_t cap) {
  if (group.order() > cap)
    throw Error(Errc::CapExceeded, "normal subgroups requested for group of order " +
                                       std::to_string(group.order()) + " > cap " +
                                       std::to_string(cap));
  const GroupTable table(group);

  // Normal closures of single conjugacy classes.
  std::vector<IndexedSubgroup> class_closures;
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<IndexedSubgroup> all;
  {
    auto trivial = table.closure({});
    known.insert(trivial.elements);
    all.push_back(std::move(trivial));
  }
  for (const auto& cls : table.conjugacy_classes()) {
    if (cls.front() == table.identity() && cls.size() == 1)
      continue;
    auto c = table.closure(cls);
    if (known.insert(c.elements).second) {
      class_closures.push_back(c);
      all.push_back(std::move(c));
    }
  }

  // Join closure: every normal subgroup is a join of class closures.
  std::vector<std::size_t> frontier(all.size());
  std::iota(frontier.begin(), frontier.end(), std::size_t{0});
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (const auto& c : class_closures) {
        if (c.elements.is_subset_of(all[idx].elements))
          continue;
        auto j = table.extend(all[idx], c.generators);
        if (known.insert(j.elements).second) {
          next.push_back(all.size());
          all.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }
  return materialize(table, std::move(all));
}

PermGroup largest_normal_p_subgroup(const PermGroup& group, unsigned p, std::size_t cap) {
  auto is_p_power = [p](std::size_t n) {
    while (n % p == 0)
      n /= p;
    return n == 1;
  };
  PermGroup best = PermGroup::trivial(group.degree());
  for (const auto& n : normal_subgroups(group, cap))
    if (is_p_power(n.order()) && n.order() > best.order())
      best = n;
  return best;
}

}  // namespace hat
