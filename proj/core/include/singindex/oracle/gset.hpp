#pragma once

#include "singindex/permutation_group.hpp"

#include <cstdint>
#include <vector>

namespace singindex::oracle {

using burnside::ElementSet;
using burnside::FiniteGroup;

/// Explicit finite G-set: action[g][x] is the image of point x under element g.
struct GSet {
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> action;
};

/// G acting on left cosets of K by left multiplication.
GSet coset_space(const FiniteGroup& group, const ElementSet& k);
/// Diagonal action on the Cartesian product.
GSet product(const GSet& a, const GSet& b);
/// Disjoint union.
GSet disjoint_union(const GSet& a, const GSet& b);
/// Same set with the action of a subgroup; `embedding` maps subgroup indices into the group.
GSet restrict_to(const GSet& set, const std::vector<std::size_t>& embedding);
/// G x_H Z for an H-set Z.
GSet induce(const FiniteGroup& group, const std::vector<std::size_t>& embedding, const GSet& set);

/// Every subgroup, by closures of all element subsets of size <= log2|G|.
std::vector<ElementSet> all_subgroups(const FiniteGroup& group);
/// Subgroups partitioned into conjugacy classes, each class a list of subgroups.
std::vector<std::vector<ElementSet>> conjugacy_classes_of_subgroups(const FiniteGroup& group);

/// Number of orbits whose stabilizer is conjugate to each of `representatives`.
std::vector<std::int64_t> orbit_type_counts(const FiniteGroup& group, const GSet& set,
                                            const std::vector<ElementSet>& representatives);

}  // namespace singindex::oracle
