#include "singindex/burnside.hpp"

#include "singindex/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace singindex::burnside {

namespace {

ElementSet canonical_key(const FiniteGroup& g, const ElementSet& subgroup) {
  ElementSet best = subgroup;
  for (std::size_t x = 0; x < g.order(); ++x) {
    ElementSet c = g.conjugate(subgroup, x);
    if (c < best) best = std::move(c);
  }
  return best;
}

ElementSet small_generating_set(const FiniteGroup& g, const ElementSet& subgroup) {
  ElementSet gens;
  ElementSet span{FiniteGroup::identity()};
  for (auto x : subgroup) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = g.closure(gens);
    if (span.size() == subgroup.size()) break;
  }
  return gens;
}

bool same_group(const BurnsideRing& a, const BurnsideRing& b) {
  return &a == &b || (a.group().degree() == b.group().degree() && a.group().elements() == b.group().elements());
}

void require_same(const BurnsideElement& a, const BurnsideElement& b) {
  if (!a.ring() || !b.ring()) throw RejectedInput("Burnside element without a group");
  if (!same_group(*a.ring(), *b.ring())) throw RejectedInput("Burnside elements over different groups");
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  std::set<ElementSet> all;
  std::vector<std::pair<std::size_t, ElementSet>> cyclic;
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet c = group.closure({x});
    if (all.insert(c).second) cyclic.emplace_back(x, std::move(c));
  }
  // Every subgroup is a join of cyclic subgroups; closure() cuts off as soon as
  // the order passes |G|/2.
  std::vector<ElementSet> queue(all.begin(), all.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementSet h = queue[head];
    if (h.size() == n) continue;
    const ElementSet hgens = small_generating_set(group, h);
    for (const auto& [x, c] : cyclic) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      ElementSet gens = hgens;
      gens.push_back(x);
      ElementSet j = group.closure(gens);
      if (all.insert(j).second) queue.push_back(std::move(j));
    }
  }

  std::map<ElementSet, std::size_t> class_sizes;
  for (const auto& h : all) ++class_sizes[canonical_key(group, h)];

  std::vector<SubgroupClass> out;
  for (const auto& [key, count] : class_sizes) {
    SubgroupClass c;
    c.order = key.size();
    c.representative = key;
    c.conjugates = count;
    c.normalizer_order = n / count;
    c.generators = small_generating_set(group, key);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.representative < b.representative;
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

BurnsideRing::BurnsideRing(FiniteGroup group) : group_(std::move(group)) {
  classes_ = subgroup_classes(group_);
  const std::size_t c = classes_.size();
  const std::size_t n = group_.order();
  marks_.assign(c, std::vector<std::int64_t>(c, 0));
  for (std::size_t k = 0; k < c; ++k) {
    const auto& kset = classes_[k].representative;
    std::vector<bool> in_k(n, false);
    for (auto x : kset) in_k[x] = true;
    for (std::size_t h = 0; h <= k; ++h) {
      const auto& hgens = classes_[h].generators;
      std::int64_t count = 0;
      for (std::size_t g = 0; g < n; ++g) {
        const std::size_t gi = group_.inverse(g);
        bool inside = true;
        for (auto x : hgens)
          if (!in_k[group_.multiply(group_.multiply(gi, x), g)]) { inside = false; break; }
        if (inside) ++count;
      }
      marks_[k][h] = count / static_cast<std::int64_t>(kset.size());
    }
  }
  canonical_keys_.reserve(c);
  for (const auto& cl : classes_) canonical_keys_.push_back(cl.representative);
}

RingPtr BurnsideRing::create(FiniteGroup group) {
  return std::shared_ptr<const BurnsideRing>(new BurnsideRing(std::move(group)));
}

std::size_t BurnsideRing::class_of(const ElementSet& subgroup) const {
  ElementSet sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());
  if (!group_.is_subgroup(sorted)) throw RejectedInput("element set is not a subgroup");
  const ElementSet key = canonical_key(group_, sorted);
  for (std::size_t i = 0; i < canonical_keys_.size(); ++i)
    if (canonical_keys_[i] == key) return i;
  throw InternalError("subgroup missing from the class list");
}

std::string BurnsideRing::label(std::size_t i, const std::string& group) const {
  if (i == whole_class()) return group;
  if (i == trivial_class()) return "e";
  return "K" + std::to_string(i);
}

std::vector<std::int64_t> BurnsideRing::mark_vector(const std::vector<std::int64_t>& coefficients) const {
  std::vector<std::int64_t> v(size(), 0);
  for (std::size_t k = 0; k < size(); ++k) {
    if (coefficients[k] == 0) continue;
    for (std::size_t h = 0; h <= k; ++h) v[h] += coefficients[k] * marks_[k][h];
  }
  return v;
}

std::vector<std::int64_t> BurnsideRing::from_marks(const std::vector<std::int64_t>& marks) const {
  std::vector<std::int64_t> c(size(), 0);
  for (std::size_t h = size(); h-- > 0;) {
    std::int64_t rest = marks[h];
    for (std::size_t k = h + 1; k < size(); ++k) rest -= c[k] * marks_[k][h];
    if (rest % marks_[h][h] != 0) throw InternalError("non-integral solve in the table of marks");
    c[h] = rest / marks_[h][h];
  }
  return c;
}

BurnsideElement::BurnsideElement(RingPtr ring, std::vector<std::int64_t> coefficients)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients)) {
  if (!ring_) throw RejectedInput("Burnside element without a group");
  if (coefficients_.size() != ring_->size()) throw RejectedInput("coefficient vector has the wrong length");
}

BurnsideElement BurnsideElement::zero(RingPtr ring) {
  const std::size_t n = ring->size();
  return BurnsideElement(std::move(ring), std::vector<std::int64_t>(n, 0));
}

BurnsideElement BurnsideElement::basis(RingPtr ring, std::size_t class_index, std::int64_t coefficient) {
  if (class_index >= ring->size()) throw RejectedInput("class index " + std::to_string(class_index) + " out of range");
  BurnsideElement e = zero(std::move(ring));
  e.coefficients_[class_index] = coefficient;
  return e;
}

bool BurnsideElement::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](auto c) { return c == 0; });
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  require_same(*this, o);
  auto c = coefficients_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coefficients_[i];
  return BurnsideElement(ring_, std::move(c));
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const { return *this + (-o); }

BurnsideElement BurnsideElement::operator-() const { return *this * -1; }

BurnsideElement BurnsideElement::operator*(std::int64_t s) const {
  auto c = coefficients_;
  for (auto& x : c) x *= s;
  return BurnsideElement(ring_, std::move(c));
}

BurnsideElement BurnsideElement::operator*(const BurnsideElement& o) const { return burnside_mul(*this, o); }

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  if (!ring_ || !o.ring_) return !ring_ && !o.ring_;
  return same_group(*ring_, *o.ring_) && coefficients_ == o.coefficients_;
}

std::string BurnsideElement::to_string(const std::string& group) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const std::int64_t c = coefficients_[i];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (a != 1) os << a << "·";
    os << "[" << group << "/" << ring_->label(i, group) << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

BurnsideElement burnside_mul(const BurnsideElement& a, const BurnsideElement& b) {
  require_same(a, b);
  const auto& ring = *a.ring();
  auto va = ring.mark_vector(a.coefficients());
  const auto vb = ring.mark_vector(b.coefficients());
  for (std::size_t i = 0; i < va.size(); ++i) va[i] *= vb[i];
  return BurnsideElement(a.ring(), ring.from_marks(va));
}

RingPtr subgroup_ring(const BurnsideRing& ring, const std::vector<Permutation>& generators) {
  for (const auto& p : generators)
    if (!ring.group().index_of(p)) throw RejectedInput("H is not a subgroup of G");
  return BurnsideRing::create(FiniteGroup(ring.group().degree(), generators, ring.group().order()));
}

BurnsideElement restriction(const BurnsideElement& a, const RingPtr& sub) {
  const auto& big = *a.ring();
  const FiniteGroup& g = big.group();
  const FiniteGroup& h = sub->group();
  const auto embed = g.embedding_of(h);
  std::vector<std::size_t> back(g.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = i;

  std::vector<std::int64_t> out(sub->size(), 0);
  for (std::size_t k = 0; k < big.size(); ++k) {
    if (a[k] == 0) continue;
    const ElementSet& kset = big.classes()[k].representative;
    // Left cosets xK, labelled by their smallest element.
    std::vector<std::size_t> coset_of(g.order(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (coset_of[x] != static_cast<std::size_t>(-1)) continue;
      for (auto y : kset) coset_of[g.multiply(x, y)] = reps.size();
      reps.push_back(x);
    }
    std::vector<bool> seen(reps.size(), false);
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (seen[c]) continue;
      for (auto hx : embed) seen[coset_of[g.multiply(hx, reps[c])]] = true;
      ElementSet stab;
      for (std::size_t i = 0; i < embed.size(); ++i)
        if (coset_of[g.multiply(embed[i], reps[c])] == c) stab.push_back(i);
      out[sub->class_of(stab)] += a[k];
    }
  }
  return BurnsideElement(sub, std::move(out));
}

BurnsideElement induction(const BurnsideElement& a, const RingPtr& whole) {
  const auto& small = *a.ring();
  const auto embed = whole->group().embedding_of(small.group());
  std::vector<std::int64_t> out(whole->size(), 0);
  for (std::size_t k = 0; k < small.size(); ++k) {
    if (a[k] == 0) continue;
    ElementSet image;
    for (auto x : small.classes()[k].representative) image.push_back(embed[x]);
    out[whole->class_of(image)] += a[k];
  }
  return BurnsideElement(whole, std::move(out));
}

std::int64_t r0(const BurnsideElement& a) {
  std::int64_t s = 0;
  for (auto c : a.coefficients()) s += c;
  return s;
}

BurnsideElement equivariant_euler(const RingPtr& ring, const GStrataData& data) {
  auto out = BurnsideElement::zero(ring);
  for (const auto& r : data) out = out + BurnsideElement::basis(ring, r.isotropy_class, r.chi_orbit);
  return out;
}

std::int64_t underlying_cardinality(const BurnsideElement& a) {
  return a.ring()->mark_vector(a.coefficients())[a.ring()->trivial_class()];
}

BurnsideElement equivariant_radial_index(const RingPtr& ring, const GSingularData& data) {
  auto out = BurnsideElement::zero(ring);
  for (const auto& r : data) out = out + BurnsideElement::basis(ring, r.isotropy_class, r.local_index);
  return out;
}

BurnsideElement induced_index_sum(const RingPtr& ring, const std::vector<BurnsideElement>& orbit_indices) {
  auto sum = BurnsideElement::zero(ring);
  for (const auto& e : orbit_indices) sum = sum + induction(e, ring);
  return sum;
}

bool equivariant_ph_check(const RingPtr& ring, const std::vector<BurnsideElement>& orbit_indices,
                          const BurnsideElement& chi_g) {
  return induced_index_sum(ring, orbit_indices) == chi_g;
}

BurnsideElement equivariant_gsv_from_radial(const BurnsideElement& rad, const BurnsideElement& chibar_g) {
  return rad + chibar_g;
}

}  // namespace singindex::burnside
