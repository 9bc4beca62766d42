#include "singindex/oracle/macaulay.hpp"

#include "singindex/error.hpp"

#include <algorithm>
#include <map>

namespace singindex::oracle {

namespace {

void monomials_below(std::size_t nvars, unsigned bound, std::vector<Monomial>& out) {
  for (unsigned d = 0; d < bound; ++d) {
    // Compositions of d into nvars parts.
    std::vector<std::uint32_t> e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == nvars) {
        e[i] = left;
        out.emplace_back(e);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (nvars == 0) {
      if (d == 0) out.emplace_back(std::vector<std::uint32_t>{});
      continue;
    }
    rec(rec, 0, d);
  }
}

using Row = std::map<std::size_t, Rational>;

}  // namespace

std::size_t truncated_colength(const std::vector<Polynomial>& generators, unsigned bound) {
  if (generators.empty()) throw RejectedInput("no generators");
  const std::size_t n = generators.front().nvars();
  std::vector<Monomial> cols;
  monomials_below(n, bound, cols);
  std::map<Monomial, std::size_t> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

  std::map<std::size_t, Row> pivots;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const int ord = g.order();
    for (const auto& m : cols) {
      if (static_cast<int>(m.degree()) + ord >= static_cast<int>(bound)) continue;
      Row row;
      for (const auto& [mono, c] : g.terms()) {
        Monomial p = mono * m;
        if (p.degree() < bound) row[col_of.at(p)] = c;
      }
      while (!row.empty()) {
        auto it = pivots.find(row.begin()->first);
        if (it == pivots.end()) break;
        const Rational f = row.begin()->second / it->second.begin()->second;
        for (const auto& [col, c] : it->second) {
          Rational& slot = row[col];
          slot -= f * c;
          if (slot == 0) row.erase(col);
        }
      }
      if (!row.empty()) {
        const std::size_t lead = row.begin()->first;
        pivots.emplace(lead, std::move(row));
      }
    }
  }
  return cols.size() - pivots.size();
}

std::optional<std::size_t> macaulay_colength(const std::vector<Polynomial>& generators, unsigned max_bound) {
  std::size_t prev = truncated_colength(generators, 1);
  for (unsigned d = 2; d <= max_bound; ++d) {
    const std::size_t cur = truncated_colength(generators, d);
    if (cur == prev) return cur;
    prev = cur;
  }
  return std::nullopt;
}

std::optional<std::size_t> macaulay_colength_at(const std::vector<Polynomial>& generators,
                                                const std::vector<Rational>& point, unsigned max_bound) {
  if (generators.empty()) throw RejectedInput("no generators");
  const auto& ctx = generators.front().context();
  if (point.size() != ctx->size()) throw RejectedInput("point has the wrong dimension");
  std::vector<Polynomial> shift;
  for (std::size_t i = 0; i < point.size(); ++i)
    shift.push_back(Polynomial::variable(ctx, i) + Polynomial::constant(ctx, point[i]));
  std::vector<Polynomial> moved;
  for (const auto& g : generators) moved.push_back(g.substitute(shift));
  return macaulay_colength(moved, max_bound);
}

}  // namespace singindex::oracle
