#include "singindex/standard_basis.hpp"

#include "singindex/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>

namespace singindex::gb {

namespace detail {

using Term = Polynomial::Term;
using Terms = std::vector<Term>;

// Working representation: terms sorted descending in the active order.
struct Work {
  Terms terms;
  unsigned maxdeg = 0;

  bool empty() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().first; }
  const Rational& lc() const { return terms.front().second; }
  unsigned ecart() const { return maxdeg - lm().degree(); }
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const Context& ctx, const Options& options)
      : order_(order), ctx_(ctx), options_(options) {}

  Work make(const Polynomial& p) const {
    Work w;
    w.terms = p.terms();
    std::sort(w.terms.begin(), w.terms.end(),
              [&](const Term& a, const Term& b) { return order_.greater(a.first, b.first); });
    refresh(w);
    return w;
  }

  Polynomial to_poly(const Work& w) const { return Polynomial(ctx_, w.terms); }

  void refresh(Work& w) const {
    w.maxdeg = 0;
    for (const auto& t : w.terms) w.maxdeg = std::max(w.maxdeg, t.first.degree());
    if (w.maxdeg > options_.degree_cap) throw DegreeCapExceeded(options_.degree_cap, w.maxdeg);
  }

  void make_monic(Work& w) const {
    if (w.empty() || w.lc() == 1) return;
    const Rational inv = 1 / w.lc();
    for (auto& t : w.terms) t.second *= inv;
  }

  // h - c * m * g, truncating terms of degree >= bound.
  Work sub_mul(const Work& h, const Rational& c, const Monomial& m, const Work& g,
               unsigned bound = std::numeric_limits<unsigned>::max()) const {
    Work r;
    r.terms.reserve(h.terms.size() + g.terms.size());
    auto a = h.terms.begin();
    auto b = g.terms.begin();
    auto push = [&](Monomial mono, Rational coef) {
      if (coef != 0 && mono.degree() < bound) r.terms.emplace_back(std::move(mono), std::move(coef));
    };
    while (a != h.terms.end() || b != g.terms.end()) {
      if (b == g.terms.end()) {
        push(a->first, a->second);
        ++a;
        continue;
      }
      Monomial mb = m * b->first;
      if (a == h.terms.end()) {
        push(std::move(mb), -c * b->second);
        ++b;
        continue;
      }
      const auto cmp = order_.compare(a->first, mb);
      if (cmp > 0) {
        push(a->first, a->second);
        ++a;
      } else if (cmp < 0) {
        push(std::move(mb), -c * b->second);
        ++b;
      } else {
        push(std::move(mb), a->second - c * b->second);
        ++a;
        ++b;
      }
    }
    refresh(r);
    return r;
  }

  Work spoly(const Work& f, const Work& g) const {
    const Monomial l = f.lm().lcm(g.lm());
    Work left = sub_mul(Work{}, Rational(-1) / f.lc(), l / f.lm(), f);
    return sub_mul(left, 1 / g.lc(), l / g.lm(), g);
  }

  // Full reduction against a global Gröbner basis.
  Work global_nf(Work h, const std::vector<Work>& basis) const {
    Work result;
    while (!h.empty()) {
      const Work* red = nullptr;
      for (const auto& g : basis)
        if (g.lm().divides(h.lm())) {
          red = &g;
          break;
        }
      if (red) {
        h = sub_mul(h, h.lc() / red->lc(), h.lm() / red->lm(), *red);
      } else {
        result.terms.push_back(h.terms.front());
        h.terms.erase(h.terms.begin());
      }
    }
    refresh(result);
    return result;
  }

  // Mora's normal form with ecart-controlled reducer selection.
  Work mora_nf(Work h, const std::vector<Work>& basis) const {
    std::vector<Work> reducers = basis;
    while (!h.empty()) {
      const Work* best = nullptr;
      for (const auto& g : reducers)
        if (g.lm().divides(h.lm()) && (!best || g.ecart() < best->ecart())) best = &g;
      if (!best) break;
      if (best->ecart() > h.ecart()) {
        Work copy = *best;
        reducers.push_back(h);
        h = sub_mul(h, h.lc() / copy.lc(), h.lm() / copy.lm(), copy);
      } else {
        h = sub_mul(h, h.lc() / best->lc(), h.lm() / best->lm(), *best);
      }
      make_monic(h);
    }
    return h;
  }

  // Full reduction in the local ring modulo m^bound (see QuotientAlgebra).
  Work truncated_nf(Work h, const std::vector<Work>& basis, unsigned bound) const {
    Work result;
    h.terms.erase(std::remove_if(h.terms.begin(), h.terms.end(),
                                 [&](const Term& t) { return t.first.degree() >= bound; }),
                  h.terms.end());
    while (!h.empty()) {
      const Work* red = nullptr;
      for (const auto& g : basis)
        if (g.lm().divides(h.lm())) {
          red = &g;
          break;
        }
      if (red) {
        h = sub_mul(h, h.lc() / red->lc(), h.lm() / red->lm(), *red, bound);
      } else {
        result.terms.push_back(h.terms.front());
        h.terms.erase(h.terms.begin());
      }
    }
    refresh(result);
    return result;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  const MonomialOrder& order_;
  const Context& ctx_;
  const Options& options_;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  unsigned lcm_degree;
};

std::vector<Work> drop_redundant(std::vector<Work> basis) {
  std::vector<bool> redundant(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size() && !redundant[i]; ++j) {
      if (i == j || !basis[j].lm().divides(basis[i].lm())) continue;
      // Equal leading monomials: keep the earlier element.
      redundant[i] = basis[j].lm() != basis[i].lm() || j < i;
    }
  std::vector<Work> kept;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!redundant[i]) kept.push_back(std::move(basis[i]));
  return kept;
}

std::vector<Work> nonzero(std::vector<Work> basis) {
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Work& w) { return w.empty(); }), basis.end());
  return basis;
}

// Largest degree of a monomial outside the leading ideal, if that ideal has
// finite colength.
std::optional<unsigned> highest_corner(const std::vector<Work>& basis, std::size_t n) {
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& w : basis) {
    if (w.empty()) continue;
    if (w.lm().is_one()) return 0;
    const auto v = w.lm().pure_power_variable();
    if (v < 0) continue;
    auto& b = bound[static_cast<std::size_t>(v)];
    const auto e = w.lm()[static_cast<std::size_t>(v)];
    b = b == 0 ? e : std::min(b, e);
  }
  if (std::any_of(bound.begin(), bound.end(), [](std::uint32_t b) { return b == 0; })) return std::nullopt;
  unsigned best = 0;
  Monomial cur(n);
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == n) {
      for (const auto& w : basis)
        if (!w.empty() && w.lm().divides(cur)) return;
      best = std::max(best, cur.degree());
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      cur[var] = e;
      walk(var + 1);
    }
    cur[var] = 0;
  };
  walk(0);
  return best;
}

}  // namespace detail

using namespace detail;

struct StandardBasis::Prepared {
  std::vector<Work> basis;
};

namespace {
const Options kUncapped{std::numeric_limits<unsigned>::max()};
}

StandardBasis::StandardBasis(std::vector<Polynomial> elements, MonomialOrder order, Locality locality, Context ctx)
    : elements_(std::move(elements)), order_(std::move(order)), locality_(locality), ctx_(std::move(ctx)) {
  Engine engine(order_, ctx_, kUncapped);
  auto prepared = std::make_shared<Prepared>();
  for (const auto& e : elements_) {
    if (!same_context(e.context(), ctx_)) throw RejectedInput("basis element from another context");
    prepared->basis.push_back(engine.make(e));
    leading_.push_back(prepared->basis.back().lm());
  }
  prepared_ = std::move(prepared);
}

Polynomial StandardBasis::normal_form(const Polynomial& p) const {
  if (!same_context(p.context(), ctx_)) throw RejectedInput("normal form of a polynomial from another context");
  Engine engine(order_, ctx_, kUncapped);
  Work h = engine.make(p);
  Work r = locality_ == Locality::Global ? engine.global_nf(std::move(h), prepared_->basis)
                                         : engine.mora_nf(std::move(h), prepared_->basis);
  return engine.to_poly(r);
}

Polynomial StandardBasis::truncated_normal_form(const Polynomial& p, unsigned bound) const {
  if (locality_ != Locality::Local) throw RejectedInput("truncated normal form needs a local basis");
  if (!same_context(p.context(), ctx_)) throw RejectedInput("normal form of a polynomial from another context");
  Engine engine(order_, ctx_, kUncapped);
  return engine.to_poly(engine.truncated_nf(engine.make(p), prepared_->basis, bound));
}

StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& order, const Options& options) {
  const bool local = ideal.locality() == Locality::Local;
  if (local != order.is_local()) throw RejectedInput("monomial order locality does not match the ideal");
  if (!order.permutation().empty() && order.permutation().size() != ideal.nvars())
    throw RejectedInput("monomial order permutation has the wrong length");

  const Context& ctx = ideal.context();
  Engine engine(order, ctx, options);

  std::vector<Work> initial;
  for (const auto& g : ideal.generators()) {
    Work w = engine.make(g);
    engine.make_monic(w);
    initial.push_back(std::move(w));
  }

  // With truncation t > 0 everything is computed modulo m^t. A highest corner
  // c with c + 2 <= t certifies m^(c + 1) inside the ideal (Nakayama), after
  // which the truncated basis is a standard basis of the ideal itself.
  auto complete = [&](std::vector<Work> basis, unsigned truncation) {
  auto truncate_all = [&]() {
    for (auto& w : basis) {
      w.terms.erase(std::remove_if(w.terms.begin(), w.terms.end(),
                                   [&](const Term& t) { return t.first.degree() >= truncation; }),
                    w.terms.end());
      engine.refresh(w);
    }
  };
  auto update_truncation = [&]() {
    if (!local) return;
    const auto corner = highest_corner(basis, ideal.nvars());
    if (!corner || (truncation != 0 && *corner + 2 >= truncation)) return;
    truncation = *corner + 2;
    truncate_all();
  };
  if (truncation != 0) truncate_all();

  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    if (basis[j].empty()) return;
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].empty()) continue;
      const Monomial l = basis[i].lm().lcm(basis[j].lm());
      // Coprime leading monomials reduce to zero (product criterion).
      if (!local && l == basis[i].lm() * basis[j].lm()) continue;
      if (truncation != 0 && l.degree() >= truncation) continue;
      pairs.push_back({i, j, l.degree()});
    }
  };
  update_truncation();
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    const Pair p = *it;
    pairs.erase(it);
    if (basis[p.i].empty() || basis[p.j].empty()) continue;
    if (truncation != 0 && p.lcm_degree >= truncation) continue;
    Work s = engine.spoly(basis[p.i], basis[p.j]);
    Work h;
    if (!local)
      h = engine.global_nf(std::move(s), basis);
    else if (truncation != 0)
      h = engine.truncated_nf(std::move(s), nonzero(basis), truncation);
    else
      h = engine.mora_nf(std::move(s), nonzero(basis));
    if (h.empty()) continue;
    engine.make_monic(h);
    basis.push_back(std::move(h));
    update_truncation();
    add_pairs_for(basis.size() - 1);
  }
  return nonzero(std::move(basis));
  };

  std::vector<Work> basis;
  if (local) {
    for (const unsigned t : {8u, 16u, 32u}) {
      if (t > options.degree_cap + 1) break;
      auto candidate = complete(initial, t);
      const auto corner = highest_corner(candidate, ideal.nvars());
      if (corner && *corner + 2 <= t) {
        basis = std::move(candidate);
        break;
      }
    }
  }
  if (basis.empty()) basis = complete(std::move(initial), 0);
  basis = drop_redundant(std::move(basis));
  if (!local) {
    // Interreduce tails to obtain the reduced Gröbner basis.
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Work> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      Work head;
      head.terms.push_back(basis[i].terms.front());
      Work tail = basis[i];
      tail.terms.erase(tail.terms.begin());
      engine.refresh(tail);
      Work reduced = engine.global_nf(std::move(tail), others);
      head.terms.insert(head.terms.end(), reduced.terms.begin(), reduced.terms.end());
      engine.refresh(head);
      basis[i] = std::move(head);
    }
  }

  std::sort(basis.begin(), basis.end(),
            [&](const Work& a, const Work& b) { return order.greater(b.lm(), a.lm()); });
  std::vector<Polynomial> elements;
  for (const auto& w : basis) elements.push_back(engine.to_poly(w));
  StandardBasis sb(std::move(elements), order, ideal.locality(), ctx);
  if (!local || !is_zero_dimensional(sb)) return sb;

  // Zero-dimensional local case: m^bound lies in the ideal, so tails can be
  // reduced to standard monomials without changing the leading ideal.
  unsigned bound = 0;
  for (const auto& m : standard_monomials(sb)) bound = std::max(bound, m.degree() + 1);
  std::vector<Polynomial> reduced;
  for (const auto& w : basis) {
    Work tail = w;
    tail.terms.erase(tail.terms.begin());
    Work head;
    head.terms.push_back(w.terms.front());
    if (bound > 0) {
      Work r = engine.truncated_nf(std::move(tail), basis, bound);
      head.terms.insert(head.terms.end(), r.terms.begin(), r.terms.end());
    }
    reduced.push_back(engine.to_poly(head));
  }
  return StandardBasis(std::move(reduced), order, ideal.locality(), ctx);
}

StandardBasis standard_basis(const Ideal& ideal, const Options& options) {
  return standard_basis(ideal, ideal.locality() == Locality::Local ? MonomialOrder::local() : MonomialOrder::global(),
                        options);
}

bool is_zero_dimensional(const StandardBasis& sb) {
  const std::size_t n = sb.context()->size();
  std::vector<bool> covered(n, false);
  for (const auto& m : sb.leading_monomials()) {
    if (m.is_one()) return true;
    const auto v = m.pure_power_variable();
    if (v >= 0) covered[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const StandardBasis& sb) {
  if (!is_zero_dimensional(sb)) throw NotIsolated("quotient is infinite-dimensional");
  const std::size_t n = sb.context()->size();
  const auto& leading = sb.leading_monomials();
  for (const auto& m : leading)
    if (m.is_one()) return {};

  std::vector<std::uint32_t> bound(n, std::numeric_limits<std::uint32_t>::max());
  for (const auto& m : leading) {
    const auto v = m.pure_power_variable();
    if (v >= 0) bound[static_cast<std::size_t>(v)] = std::min(bound[static_cast<std::size_t>(v)], m[static_cast<std::size_t>(v)]);
  }

  std::vector<Monomial> out;
  Monomial cur(n);
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == n) {
      for (const auto& m : leading)
        if (m.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      cur[var] = e;
      walk(var + 1);
    }
    cur[var] = 0;
  };
  walk(0);

  const MonomialOrder grevlex = MonomialOrder::global();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return grevlex.greater(a, b);
  });
  return out;
}

Colength colength(const StandardBasis& sb) {
  if (!is_zero_dimensional(sb)) return Colength::infinite();
  return Colength::finite(standard_monomials(sb).size());
}

Colength colength(const Ideal& ideal, const Options& options) {
  if (ideal.is_zero()) return Colength::infinite();
  return colength(standard_basis(ideal, options));
}

}  // namespace singindex::gb
