#include "singindex/oracle/gset.hpp"

#include "singindex/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace singindex::oracle {

GSet coset_space(const FiniteGroup& group, const ElementSet& k) {
  std::vector<ElementSet> cosets;
  std::map<ElementSet, std::size_t> index;
  for (std::size_t g = 0; g < group.order(); ++g) {
    ElementSet c;
    for (auto x : k) c.push_back(group.multiply(g, x));
    std::sort(c.begin(), c.end());
    if (index.emplace(c, cosets.size()).second) cosets.push_back(c);
  }
  GSet out;
  out.points = cosets.size();
  out.action.assign(group.order(), std::vector<std::size_t>(out.points));
  for (std::size_t g = 0; g < group.order(); ++g)
    for (std::size_t p = 0; p < cosets.size(); ++p) {
      ElementSet c;
      for (auto x : cosets[p]) c.push_back(group.multiply(g, x));
      std::sort(c.begin(), c.end());
      out.action[g][p] = index.at(c);
    }
  return out;
}

GSet product(const GSet& a, const GSet& b) {
  GSet out;
  out.points = a.points * b.points;
  out.action.resize(a.action.size());
  for (std::size_t g = 0; g < a.action.size(); ++g) {
    out.action[g].resize(out.points);
    for (std::size_t x = 0; x < a.points; ++x)
      for (std::size_t y = 0; y < b.points; ++y)
        out.action[g][x * b.points + y] = a.action[g][x] * b.points + b.action[g][y];
  }
  return out;
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  GSet out;
  out.points = a.points + b.points;
  out.action.resize(a.action.size());
  for (std::size_t g = 0; g < a.action.size(); ++g) {
    out.action[g] = a.action[g];
    for (auto y : b.action[g]) out.action[g].push_back(a.points + y);
  }
  return out;
}

GSet restrict_to(const GSet& set, const std::vector<std::size_t>& embedding) {
  GSet out;
  out.points = set.points;
  for (auto g : embedding) out.action.push_back(set.action[g]);
  return out;
}

GSet induce(const FiniteGroup& group, const std::vector<std::size_t>& embedding, const GSet& set) {
  // Points of G x Z modulo (g h, z) ~ (g, h z); label each class by its smallest pair.
  const std::size_t n = group.order();
  auto pair_id = [&](std::size_t g, std::size_t z) { return g * set.points + z; };
  std::vector<std::size_t> cls(n * set.points, static_cast<std::size_t>(-1));
  std::size_t count = 0;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t z = 0; z < set.points; ++z) {
      if (cls[pair_id(g, z)] != static_cast<std::size_t>(-1)) continue;
      for (std::size_t i = 0; i < embedding.size(); ++i) {
        const std::size_t h = embedding[i];
        // (g, z) ~ (g h^-1, h z)
        const std::size_t gh = group.multiply(g, group.inverse(h));
        cls[pair_id(gh, set.action[i][z])] = count;
      }
      ++count;
    }
  GSet out;
  out.points = count;
  out.action.assign(n, std::vector<std::size_t>(count));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t z = 0; z < set.points; ++z)
        out.action[x][cls[pair_id(g, z)]] = cls[pair_id(group.multiply(x, g), z)];
  return out;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::size_t rank = 0;
  while ((std::size_t{1} << rank) < n) ++rank;
  std::set<ElementSet> found;
  ElementSet pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    found.insert(group.closure(pick));
    if (pick.size() == rank) return;
    for (std::size_t x = start; x < n; ++x) {
      pick.push_back(x);
      self(self, x + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return {found.begin(), found.end()};
}

std::vector<std::vector<ElementSet>> conjugacy_classes_of_subgroups(const FiniteGroup& group) {
  const auto subs = all_subgroups(group);
  std::vector<bool> used(subs.size(), false);
  std::vector<std::vector<ElementSet>> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (used[i]) continue;
    std::set<ElementSet> conj;
    for (std::size_t g = 0; g < group.order(); ++g) conj.insert(group.conjugate(subs[i], g));
    for (std::size_t j = i; j < subs.size(); ++j)
      if (conj.count(subs[j])) used[j] = true;
    out.emplace_back(conj.begin(), conj.end());
  }
  return out;
}

std::vector<std::int64_t> orbit_type_counts(const FiniteGroup& group, const GSet& set,
                                            const std::vector<ElementSet>& representatives) {
  std::vector<std::int64_t> counts(representatives.size(), 0);
  std::vector<bool> seen(set.points, false);
  for (std::size_t x = 0; x < set.points; ++x) {
    if (seen[x]) continue;
    for (std::size_t g = 0; g < group.order(); ++g) seen[set.action[g][x]] = true;
    ElementSet stab;
    for (std::size_t g = 0; g < group.order(); ++g)
      if (set.action[g][x] == x) stab.push_back(g);
    bool matched = false;
    for (std::size_t r = 0; r < representatives.size() && !matched; ++r) {
      if (representatives[r].size() != stab.size()) continue;
      for (std::size_t g = 0; g < group.order(); ++g)
        if (group.conjugate(representatives[r], g) == stab) {
          ++counts[r];
          matched = true;
          break;
        }
    }
    if (!matched) throw InternalError("orbit stabilizer matches no representative");
  }
  return counts;
}

}  // namespace singindex::oracle
