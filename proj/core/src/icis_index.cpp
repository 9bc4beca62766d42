#include "singindex/icis_index.hpp"

#include "singindex/error.hpp"
#include "singindex/matrix.hpp"
#include "singindex/standard_basis.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace singindex::icis {

namespace {

gb::Colength logged_colength(const std::string& label, const std::vector<Polynomial>& gens,
                             const gb::Options& options, CertificateLog* log) {
  const gb::Colength c = gb::colength(gb::Ideal(gens), options);
  if (log) log->push_back({label, gens.size(), c});
  return c;
}

// Rows: the differentials of the equations followed by the extra forms.
PolyMatrix stacked(const ICISGerm& v, const std::vector<std::vector<Polynomial>>& extra_rows) {
  const std::size_t n_cols = v.ambient_dim();
  const std::size_t n_rows = v.equations.size() + extra_rows.size();
  PolyMatrix m(v.context, n_rows, n_cols);
  for (std::size_t r = 0; r < v.equations.size(); ++r)
    for (std::size_t c = 0; c < n_cols; ++c) m(r, c) = v.equations[r].derivative(c);
  for (std::size_t r = 0; r < extra_rows.size(); ++r)
    for (std::size_t c = 0; c < n_cols; ++c) m(v.equations.size() + r, c) = extra_rows[r][c];
  return m;
}

void require_form(const ICISGerm& v, const smooth::OneFormGerm& w) {
  w.validate();
  if (!same_context(w.coefficients.front().context(), v.context))
    throw RejectedInput("the 1-form lives in a different ambient space than V");
}

std::vector<Polynomial> with_minors(std::vector<Polynomial> gens, const PolyMatrix& m, std::size_t k) {
  for (auto& p : minors(m, k)) gens.push_back(std::move(p));
  return gens;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct Chain {
  std::int64_t mu = 0;
  std::vector<std::vector<int>> slices;
  CertificateLog log;
};

std::vector<int> draw_form(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-9, 9);
  std::vector<int> coeffs(n, 0);
  while (std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; }))
    for (auto& c : coeffs) c = dist(rng);
  return coeffs;
}

Polynomial linear_form(const Context& ctx, const std::vector<int>& coeffs) {
  Polynomial p(ctx);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p += Polynomial::term(ctx, Monomial::variable(ctx->size(), i), Rational(coeffs[i]));
  return p;
}

// One Lê-Greuel chain; nullopt when some colength is infinite.
std::optional<Chain> milnor_chain(const ICISGerm& v, std::mt19937_64& rng, const gb::Options& options) {
  const std::size_t n = v.dim();
  const std::size_t big_n = v.ambient_dim();
  Chain chain;
  std::vector<Polynomial> ells;
  for (std::size_t i = 0; i < n; ++i) {
    chain.slices.push_back(draw_form(rng, big_n));
    ells.push_back(linear_form(v.context, chain.slices.back()));
  }

  // X_0: zero-dimensional complete intersection.
  std::vector<Polynomial> gens = v.equations;
  gens.insert(gens.end(), ells.begin(), ells.end());
  if (gens.empty()) return chain;  // the point C^0
  const gb::Colength base = logged_colength("mu(X_0) + 1: dim O/(f, l_1..l_" + std::to_string(n) + ")", gens,
                                            options, &chain.log);
  if (base.is_infinite()) return std::nullopt;
  std::int64_t mu = static_cast<std::int64_t>(base.value()) - 1;

  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t cut = n - j;  // X_j = V cap {l_1 .. l_cut = 0}
    ICISGerm xj{v.context, v.equations};
    xj.equations.insert(xj.equations.end(), ells.begin(), ells.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<std::vector<Polynomial>> extra(1);
    for (std::size_t c = 0; c < big_n; ++c) extra[0].push_back(ells[cut].derivative(c));
    const PolyMatrix m = stacked(xj, extra);
    const auto ideal = with_minors(xj.equations, m, m.rows());
    const gb::Colength step =
        logged_colength("mu(X_" + std::to_string(j) + ") + mu(X_" + std::to_string(j - 1) + ")", ideal, options,
                        &chain.log);
    if (step.is_infinite()) return std::nullopt;
    mu = static_cast<std::int64_t>(step.value()) - mu;
  }
  chain.mu = mu;
  return chain;
}

constexpr int kMaxDraws = 5;

// Values of successive valid chains from one stream.
std::vector<Chain> chains_from(const ICISGerm& v, std::uint64_t seed, std::size_t wanted, const gb::Options& options) {
  std::mt19937_64 rng(seed);
  std::vector<Chain> out;
  for (int draw = 0; draw < kMaxDraws && out.size() < wanted; ++draw)
    if (auto c = milnor_chain(v, rng, options)) out.push_back(std::move(*c));
  return out;
}

}  // namespace

void ICISGerm::validate() const {
  if (!context) throw RejectedInput("ICIS germ without variables");
  if (equations.size() > context->size()) throw RejectedInput("more equations than ambient variables");
  for (const auto& f : equations) {
    if (!same_context(f.context(), context)) throw RejectedInput("equation from another variable context");
    if (f.constant_term() != 0) throw RejectedInput("equation " + f.to_string() + " does not vanish at the origin");
  }
}

gb::Colength singular_locus_colength(const ICISGerm& v, const gb::Options& options, CertificateLog* log) {
  v.validate();
  if (v.equations.empty()) {
    if (log) log->push_back({"V is the smooth ambient space", 0, gb::Colength::finite(0)});
    return gb::Colength::finite(0);
  }
  const PolyMatrix j = jacobian_matrix(v.equations);
  const auto gens = with_minors(v.equations, j, j.rows());
  return logged_colength("isolatedness of V: dim O/(f, maximal minors of df)", gens, options, log);
}

gb::Colength gsv_index_1form(const ICISGerm& v, const smooth::OneFormGerm& w, const gb::Options& options,
                             CertificateLog* log) {
  v.validate();
  require_form(v, w);
  const PolyMatrix m = stacked(v, {w.coefficients});
  const auto gens = with_minors(v.equations, m, m.rows());
  return logged_colength("gsv: dim O/(f, maximal minors of (df, omega))", gens, options, log);
}

gb::Colength gsv_index_collection(const ICISGerm& v, const FormCollection& c, const gb::Options& options,
                                  CertificateLog* log) {
  v.validate();
  const std::size_t n = v.dim();
  if (c.groups.empty() || c.groups.size() != c.partition.size())
    throw RejectedInput("collection needs one group of forms per partition part");
  std::size_t total = 0;
  for (auto k : c.partition) total += k;
  if (total != n)
    throw RejectedInput("partition sums to " + std::to_string(total) + " but dim V = " + std::to_string(n));

  std::vector<Polynomial> gens = v.equations;
  for (std::size_t i = 0; i < c.groups.size(); ++i) {
    const std::size_t k = c.partition[i];
    if (k < 1 || k > n) throw RejectedInput("partition part out of range 1..dim V");
    if (c.groups[i].size() != n - k + 1)
      throw RejectedInput("group " + std::to_string(i) + " must hold " + std::to_string(n - k + 1) + " forms");
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& w : c.groups[i]) {
      require_form(v, w);
      rows.push_back(w.coefficients);
    }
    const PolyMatrix m = stacked(v, rows);
    for (auto& p : minors(m, m.rows())) gens.push_back(std::move(p));
  }
  if (gens.empty()) throw RejectedInput("collection produced no generators");
  return logged_colength("gsv of collection: dim O/(f, minors of each stacked group)", gens, options, log);
}

MilnorResult milnor_number(const ICISGerm& v, std::uint64_t seed, const gb::Options& options) {
  v.validate();
  const gb::Colength iso = singular_locus_colength(v, options);
  if (iso.is_infinite()) throw NotIsolated("V does not have an isolated singular point");

  const std::uint64_t second = splitmix64(seed);
  auto a = chains_from(v, seed, 1, options);
  auto b = chains_from(v, second, 1, options);
  if (a.empty() || b.empty())
    throw GenericityFailure("no generic slice chain found in " + std::to_string(kMaxDraws) + " draws");
  if (a.front().mu != b.front().mu) {
    // Resolve a rare non-generic but finite chain by agreement across streams.
    a = chains_from(v, seed, kMaxDraws, options);
    b = chains_from(v, second, kMaxDraws, options);
    std::map<std::int64_t, int> seen_a;
    for (const auto& c : a) seen_a[c.mu]++;
    const Chain* agreed = nullptr;
    for (const auto& c : b)
      if (seen_a.count(c.mu) && (!agreed || c.mu < agreed->mu)) agreed = &c;
    if (!agreed) throw GenericityFailure("Milnor number depends on the random slices; no agreement across seeds");
    return MilnorResult{agreed->mu, seed, second, agreed->slices, agreed->log};
  }
  return MilnorResult{a.front().mu, seed, second, a.front().slices, a.front().log};
}

std::int64_t radial_index_1form(const ICISGerm& v, const smooth::OneFormGerm& w, std::uint64_t seed,
                                const gb::Options& options) {
  const std::int64_t gsv = static_cast<std::int64_t>(gsv_index_1form(v, w, options).value());
  return gsv - milnor_number(v, seed, options).mu;
}

std::int64_t radial_index_vf_from_gsv(std::int64_t gsv, std::int64_t mu, std::size_t n) {
  return n % 2 == 0 ? gsv - mu : gsv + mu;
}

gb::Colength homological_index_1form(const ICISGerm& v, const smooth::OneFormGerm& w, const gb::Options& options,
                                     CertificateLog* log) {
  return gsv_index_1form(v, w, options, log);
}

void ICISIndexReport::check() const {
  if (radial && (!gsv || !milnor || *radial != *gsv - *milnor))
    throw InternalError("report violates radial = gsv - mu");
  if (homological && (!gsv || *homological != *gsv)) throw InternalError("report violates homological = gsv");
}

ICISIndexReport icis_report(const ICISGerm& v, const smooth::OneFormGerm& w, const std::vector<Quantity>& wants,
                            std::uint64_t seed, const gb::Options& options) {
  auto wanted = [&](Quantity q) { return std::find(wants.begin(), wants.end(), q) != wants.end(); };
  ICISIndexReport report;
  report.singular_locus = singular_locus_colength(v, options, &report.certificates);
  if (report.singular_locus.is_infinite()) {
    report.notes.push_back("V is not an isolated complete intersection singularity");
    report.gsv_isolated = false;
    return report;
  }

  const bool need_gsv = wanted(Quantity::Gsv) || wanted(Quantity::Radial) || wanted(Quantity::Homological);
  if (need_gsv) {
    const gb::Colength g = gsv_index_1form(v, w, options, &report.certificates);
    if (g.is_infinite()) {
      report.gsv_isolated = false;
      report.notes.push_back("the 1-form has a non-isolated singular point on V");
      return report;
    }
    report.gsv = static_cast<std::int64_t>(g.value());
  }
  if (wanted(Quantity::Milnor) || wanted(Quantity::Radial)) {
    MilnorResult m = milnor_number(v, seed, options);
    report.milnor = m.mu;
    report.milnor_slices = m.slices;
    for (auto& c : m.chain) report.certificates.push_back(std::move(c));
  }
  if (wanted(Quantity::Radial)) report.radial = *report.gsv - *report.milnor;
  if (wanted(Quantity::Homological)) {
    report.homological = report.gsv;
    report.notes.push_back("homological index equals the GSV index on an ICIS");
  }
  report.check();
  return report;
}

}  // namespace singindex::icis
