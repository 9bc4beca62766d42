#include "singindex/permutation_group.hpp"

#include "singindex/error.hpp"

#include <algorithm>
#include <set>

namespace singindex::burnside {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t max_order)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ == 0) throw RejectedInput("permutation degree must be positive");
  for (const auto& g : generators_) {
    if (g.size() != degree_) throw RejectedInput("generator has the wrong degree");
    std::vector<bool> seen(degree_, false);
    for (auto v : g) {
      if (v >= degree_ || seen[v]) throw RejectedInput("generator is not a permutation");
      seen[v] = true;
    }
  }
  Permutation id(degree_);
  for (std::size_t i = 0; i < degree_; ++i) id[i] = static_cast<std::uint16_t>(i);

  std::set<Permutation> found{id};
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators_) {
        Permutation y = compose(x, g);
        if (found.insert(y).second) {
          if (found.size() > max_order)
            throw RejectedInput("group order exceeds the cap of " + std::to_string(max_order));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  elements_.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = index_.at(compose(elements_[a], elements_[b]));
      table_[a * n + b] = c;
      if (c == identity()) inverse_[a] = b;
    }
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet FiniteGroup::closure(const ElementSet& generators) const {
  std::vector<bool> in(order(), false);
  ElementSet members{identity()};
  in[identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : generators) {
      const std::size_t y = multiply(members[head], g);
      if (in[y]) continue;
      in[y] = true;
      members.push_back(y);
      // A subgroup larger than half the group is the whole group.
      if (2 * members.size() > order()) {
        ElementSet all(order());
        for (std::size_t i = 0; i < order(); ++i) all[i] = i;
        return all;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet FiniteGroup::conjugate(const ElementSet& subgroup, std::size_t g) const {
  ElementSet out;
  out.reserve(subgroup.size());
  const std::size_t gi = inverse(g);
  for (auto h : subgroup) out.push_back(multiply(multiply(g, h), gi));
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_subgroup(const ElementSet& elements) const {
  if (elements.empty()) return false;
  std::vector<bool> in(order(), false);
  for (auto e : elements) {
    if (e >= order()) return false;
    in[e] = true;
  }
  for (auto a : elements)
    for (auto b : elements)
      if (!in[multiply(a, b)]) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::embedding_of(const FiniteGroup& sub) const {
  if (sub.degree() != degree_) throw RejectedInput("subgroup acts on a different number of points");
  std::vector<std::size_t> map;
  map.reserve(sub.order());
  for (const auto& p : sub.elements()) {
    auto idx = index_of(p);
    if (!idx) throw RejectedInput("H is not a subgroup of G");
    map.push_back(*idx);
  }
  return map;
}

}  // namespace singindex::burnside
