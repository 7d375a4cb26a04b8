#include "hat/group_table.hpp"

#include <algorithm>
#include <bit>

#include "hat/error.hpp"

namespace hat {

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i])
      return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::vector<ElemIndex> ElementSet::members() const {
  std::vector<ElemIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<ElemIndex>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

GroupTable::GroupTable(const PermGroup& group) : group_(group), n_(group.order()) {
  init_indices();
  const auto& el = group_.elements();
  table_.assign(n_ * n_, 0);
  const auto n = static_cast<long long>(n_);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      auto idx = group_.index_of(el[static_cast<std::size_t>(a)] * el[b]);
      table_[static_cast<std::size_t>(a) * n_ + b] = static_cast<ElemIndex>(*idx);
    }
  }
}

GroupTable::GroupTable(const PermGroup& group, SerialTag) : group_(group), n_(group.order()) {
  init_indices();
  const auto& el = group_.elements();
  table_.assign(n_ * n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      table_[a * n_ + b] = static_cast<ElemIndex>(*group_.index_of(el[a] * el[b]));
}

GroupTable GroupTable::build_serial(const PermGroup& group) { return GroupTable(group, SerialTag{}); }

void GroupTable::init_indices() {
  const auto& el = group_.elements();
  identity_ = static_cast<ElemIndex>(*group_.index_of(Perm::identity(group_.degree())));
  inverse_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a)
    inverse_[a] = static_cast<ElemIndex>(*group_.index_of(el[a].inverse()));
  for (const auto& g : group_.generators())
    generators_.push_back(static_cast<ElemIndex>(*group_.index_of(g)));
}

IndexedSubgroup GroupTable::closure(std::span<const ElemIndex> generators) const {
  IndexedSubgroup trivial{ElementSet(n_), {}};
  trivial.elements.set(identity_);
  return extend(trivial, generators);
}

IndexedSubgroup GroupTable::extend(const IndexedSubgroup& base,
                                   std::span<const ElemIndex> extra) const {
  IndexedSubgroup out = base;
  for (ElemIndex x : extra) {
    if (out.elements.test(x))
      continue;
    out.generators.push_back(x);
    // Breadth-first closure under right multiplication by all generators,
    // seeded with the current subgroup.
    std::vector<ElemIndex> queue = out.elements.members();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const ElemIndex a = queue[head];
      for (ElemIndex g : out.generators) {
        const ElemIndex b = mul(a, g);
        if (!out.elements.test(b)) {
          out.elements.set(b);
          queue.push_back(b);
        }
      }
    }
  }
  return out;
}

PermGroup GroupTable::to_group(const IndexedSubgroup& sub) const {
  const auto& el = group_.elements();
  std::vector<Perm> elems;
  for (ElemIndex i : sub.elements.members())
    elems.push_back(el[i]);
  std::vector<Perm> gens;
  for (ElemIndex i : sub.generators)
    gens.push_back(el[i]);
  return PermGroup::from_elements(group_.degree(), std::move(elems), std::move(gens));
}

ElementSet GroupTable::to_set(const PermGroup& sub) const {
  ElementSet s(n_);
  for (const auto& p : sub.elements()) {
    auto idx = group_.index_of(p);
    if (!idx)
      throw Error(Errc::NotASubgroup, "subgroup element outside the tabulated group");
    s.set(static_cast<ElemIndex>(*idx));
  }
  return s;
}

std::vector<std::vector<ElemIndex>> GroupTable::conjugacy_classes() const {
  std::vector<bool> done(n_, false);
  std::vector<std::vector<ElemIndex>> classes;
  for (ElemIndex x = 0; x < n_; ++x) {
    if (done[x])
      continue;
    std::vector<ElemIndex> cls{x};
    done[x] = true;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (ElemIndex g : generators_) {
        ElemIndex y = conj(cls[head], g);
        if (!done[y]) {
          done[y] = true;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace hat
