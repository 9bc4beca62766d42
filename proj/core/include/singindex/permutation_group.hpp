#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace singindex::burnside {

/// Images of 0..d-1.
using Permutation = std::vector<std::uint16_t>;

/// Set of group elements as sorted element indices.
using ElementSet = std::vector<std::size_t>;

/// Finite permutation group with all elements enumerated. Elements are sorted
/// lexicographically by their image lists, so index 0 is the identity and the
/// numbering does not depend on the generating set.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 128;

  /// Throws RejectedInput if a generator is not a permutation of 0..d-1 or the
  /// group is larger than max_order.
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t max_order = kDefaultMaxOrder);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Permutation& element(std::size_t i) const { return elements_.at(i); }
  std::optional<std::size_t> index_of(const Permutation& p) const;

  /// Index of a*b where (a*b)(x) = a(b(x)).
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  static constexpr std::size_t identity() { return 0; }

  /// Subgroup generated by the given elements.
  ElementSet closure(const ElementSet& generators) const;
  /// g H g^-1.
  ElementSet conjugate(const ElementSet& subgroup, std::size_t g) const;
  /// Whether the given elements form a subgroup.
  bool is_subgroup(const ElementSet& elements) const;

  /// Index in this group of every element of `sub`; throws RejectedInput if
  /// `sub` is not a subgroup (same degree, all elements contained).
  std::vector<std::size_t> embedding_of(const FiniteGroup& sub) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
};

Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace singindex::burnside
