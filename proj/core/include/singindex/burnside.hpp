#pragma once

#include "singindex/permutation_group.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace singindex::burnside {

struct SubgroupClass {
  std::size_t index = 0;
  std::size_t order = 0;
  ElementSet representative;    // canonical: smallest sorted element list in the class
  std::size_t conjugates = 0;   // number of subgroups in the class
  std::size_t normalizer_order = 0;
  ElementSet generators;        // small generating set of the representative
};

/// Conjugacy classes of subgroups sorted by (order, canonical element list).
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& group);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

class BurnsideRing;
using RingPtr = std::shared_ptr<const BurnsideRing>;

/// Integer combination of the basis [G/H] over subgroup classes.
class BurnsideElement {
 public:
  BurnsideElement() = default;
  BurnsideElement(RingPtr ring, std::vector<std::int64_t> coefficients);
  static BurnsideElement zero(RingPtr ring);
  static BurnsideElement basis(RingPtr ring, std::size_t class_index, std::int64_t coefficient = 1);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
  std::int64_t operator[](std::size_t i) const { return coefficients_.at(i); }
  bool is_zero() const;

  BurnsideElement operator+(const BurnsideElement& other) const;
  BurnsideElement operator-(const BurnsideElement& other) const;
  BurnsideElement operator-() const;
  BurnsideElement operator*(std::int64_t scalar) const;
  BurnsideElement operator*(const BurnsideElement& other) const;
  bool operator==(const BurnsideElement& other) const;

  /// "2·[G/G] - [G/e]", or "0". `group` names the whole group in the labels.
  std::string to_string(const std::string& group = "G") const;

 private:
  RingPtr ring_;
  std::vector<std::int64_t> coefficients_;
};

/// Burnside ring A(G) realized through the table of marks.
class BurnsideRing : public std::enable_shared_from_this<BurnsideRing> {
 public:
  static RingPtr create(FiniteGroup group);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<SubgroupClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

  /// marks()[K][H] = |(G/K)^H|: row K is the G-set G/K, column H the subgroup
  /// whose fixed points are counted. Lower triangular with positive diagonal.
  const IntMatrix& marks() const noexcept { return marks_; }
  std::int64_t mark(std::size_t k, std::size_t h) const { return marks_[k][h]; }

  /// Class index of a subgroup given as element indices of this group.
  std::size_t class_of(const ElementSet& subgroup) const;
  /// "e", the group name, or "K<i>" for the other classes.
  std::string label(std::size_t class_index, const std::string& group = "G") const;
  std::size_t trivial_class() const noexcept { return 0; }
  std::size_t whole_class() const noexcept { return classes_.size() - 1; }

  /// Mark vector: entry H = |X^H|.
  std::vector<std::int64_t> mark_vector(const std::vector<std::int64_t>& coefficients) const;
  /// Inverse of mark_vector; throws InternalError if the solution is not integral.
  std::vector<std::int64_t> from_marks(const std::vector<std::int64_t>& marks) const;

 private:
  explicit BurnsideRing(FiniteGroup group);
  std::vector<ElementSet> canonical_keys_;
  FiniteGroup group_;
  std::vector<SubgroupClass> classes_;
  IntMatrix marks_;
};

BurnsideElement burnside_mul(const BurnsideElement& a, const BurnsideElement& b);

/// Ring of a subgroup of `ring`'s group generated by the given permutations.
RingPtr subgroup_ring(const BurnsideRing& ring, const std::vector<Permutation>& generators);

/// Res^G_H. `sub` must be the ring of a subgroup of a's group.
BurnsideElement restriction(const BurnsideElement& a, const RingPtr& sub);
/// Ind_H^G: [H/K] -> [G/K].
BurnsideElement induction(const BurnsideElement& a, const RingPtr& whole);

std::int64_t r0(const BurnsideElement& a);

struct StratumRecord {
  std::size_t isotropy_class = 0;
  std::int64_t chi_orbit = 0;
};
using GStrataData = std::vector<StratumRecord>;

struct OrbitRecord {
  std::size_t isotropy_class = 0;
  std::int64_t local_index = 0;
};
using GSingularData = std::vector<OrbitRecord>;

BurnsideElement equivariant_euler(const RingPtr& ring, const GStrataData& data);
/// Underlying non-equivariant value: sum of coefficient * |G/H|.
std::int64_t underlying_cardinality(const BurnsideElement& a);
BurnsideElement equivariant_radial_index(const RingPtr& ring, const GSingularData& data);

/// Sum of induced local indices; compare with chiG.
BurnsideElement induced_index_sum(const RingPtr& ring, const std::vector<BurnsideElement>& orbit_indices);
bool equivariant_ph_check(const RingPtr& ring, const std::vector<BurnsideElement>& orbit_indices,
                          const BurnsideElement& chi_g);

BurnsideElement equivariant_gsv_from_radial(const BurnsideElement& rad, const BurnsideElement& chibar_g);

}  // namespace singindex::burnside
