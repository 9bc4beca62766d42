#include "commands.hpp"
#include "singindex/error.hpp"
#include "singindex/strat.hpp"

#include <optional>

namespace singindex::cli {

namespace {

using strat::IndexKind;
using strat::IndexVector;
using strat::IntMatrix;
using strat::SliceData;
using strat::StratPoset;

struct StratJob {
  std::string op;
  std::optional<SliceData> data;
  std::optional<std::array<int, 3>> determinantal;  // m, n, t
  std::optional<std::vector<std::int64_t>> eu, radial, phn;
  std::optional<std::int64_t> dim, chibar;
  std::optional<std::vector<std::int64_t>> dims, chibars;
  std::array<std::int64_t, 3> proportionality{};  // eu, local, claimed
};

IntMatrix product(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool is_identity(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t top_of(const SliceData& d) {
  const auto t = d.poset().top();
  if (t < 0) throw RejectedInput("the poset has no unique maximal stratum");
  return static_cast<std::size_t>(t);
}

void put_poset(Report& r, const SliceData& d) {
  r.values["strata"] = d.poset().labels();
  r.values["n"] = matrix_json(d.values());
}

void run(Report& r, const StratJob& job) {
  if (job.op == "proportionality") {
    const auto& [eu, local, claimed] = job.proportionality;
    r.values["holds"] = strat::proportionality_check(eu, local, claimed);
    r.values["expected"] = eu * local;
    r.provenance["holds"] = "proportionality theorem: index = Eu(V, x) * local index";
    return;
  }
  if (job.op == "det-table") {
    const auto [m, n, t] = *job.determinantal;
    IntMatrix nt(t, std::vector<std::int64_t>(t, 0)), mt = nt;
    for (int i = 1; i <= t; ++i)
      for (int j = i; j <= t; ++j) {
        nt[i - 1][j - 1] = strat::det_n(m, n, i, j);
        mt[i - 1][j - 1] = strat::det_m(m, n, i, j);
      }
    r.values["n"] = matrix_json(nt);
    r.values["m"] = matrix_json(mt);
    r.values["inverse_pair"] = is_identity(product(nt, mt));
    r.provenance["n"] = "binomial formula for n_ij on determinantal varieties";
    r.provenance["m"] = "binomial formula for m_ij on determinantal varieties";
    return;
  }
  const SliceData& d = *job.data;
  put_poset(r, d);
  if (job.op == "mobius") {
    const IntMatrix m = strat::mobius_inverse(d);
    r.values["m"] = matrix_json(m);
    r.provenance["m"] = "Moebius inversion of the incidence function n on the stratification poset";
    r.certificates.push_back({{"label", "n * m = identity"}, {"holds", is_identity(product(d.values(), m))}});
    if (job.determinantal) {
      const auto [mm, nn, t] = *job.determinantal;
      bool match = true;
      for (int i = 1; i <= t; ++i)
        for (int j = i; j <= t; ++j) match = match && m[i - 1][j - 1] == strat::det_m(mm, nn, i, j);
      r.certificates.push_back({{"label", "m agrees with the binomial m_ij formula"}, {"holds", match}});
    }
    return;
  }
  if (job.op == "radial-from-eu") {
    const IndexVector eu{IndexKind::EulerObstruction, *job.eu};
    r.values["radial"] = strat::radial_vector_from_eu(d, eu).values;
    if (d.poset().top() >= 0) r.values["radial_top"] = strat::radial_from_eu(d, eu);
    r.provenance["radial"] = "radial index as the n-weighted sum of Euler obstructions of stratum closures";
    return;
  }
  if (job.op == "eu-from-radial") {
    const IndexVector rad{IndexKind::Radial, *job.radial};
    r.values["eu"] = strat::eu_vector_from_radial(d, rad).values;
    if (d.poset().top() >= 0) r.values["eu_top"] = strat::eu_from_radial(d, rad);
    r.provenance["eu"] = "Euler obstruction by Moebius inversion of the radial indices";
    return;
  }
  const std::size_t top = top_of(d);
  const auto& ext = d.poset().linear_extension();
  if (job.op == "radial-from-phn") {
    std::vector<std::int64_t> nvals;
    for (auto i : ext) nvals.push_back(d(i, top));
    std::vector<std::int64_t> phn;
    for (auto i : ext) phn.push_back((*job.phn)[i]);
    r.values["radial"] = strat::radial_from_phn(static_cast<int>(ext.size()), nvals, {IndexKind::PHN, phn},
                                                static_cast<int>(*job.dim), *job.chibar);
    r.provenance["radial"] = "radial index from PHN indices and the reduced Euler characteristic";
    return;
  }
  const IntMatrix m = strat::mobius_inverse(d);
  std::vector<std::int64_t> mvals, rad, chibars;
  std::vector<int> dims;
  for (auto i : ext) {
    mvals.push_back(m[i][top]);
    rad.push_back((*job.radial)[i]);
    chibars.push_back((*job.chibars)[i]);
    dims.push_back(static_cast<int>((*job.dims)[i]));
  }
  r.values["phn"] = strat::phn_from_radial(static_cast<int>(ext.size()), mvals, {IndexKind::Radial, rad}, chibars, dims);
  r.provenance["phn"] = "PHN index from radial indices by Moebius inversion";
}

std::optional<SliceData> load_poset(const Json& job, Loader& in) {
  const Json* strata = in.field(job, "$", "strata");
  const Json* covers = in.field(job, "$", "covers", false);
  const Json* nmap = in.field(job, "$", "n", false);
  if (!strata) return std::nullopt;
  auto labels = in.strings(*strata, "$.strata");
  if (!labels) return std::nullopt;
  const std::size_t s = labels->size();
  if (s == 0) {
    in.error("$.strata", "need at least one stratum");
    return std::nullopt;
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  if (covers) {
    if (!covers->is_array()) {
      in.error("$.covers", "expected an array of [i, j] pairs");
      return std::nullopt;
    }
    for (std::size_t k = 0; k < covers->size(); ++k) {
      auto pr = in.integers((*covers)[k], index_path("$.covers", k), 2);
      if (!pr) continue;
      if ((*pr)[0] < 0 || (*pr)[1] < 0 || (*pr)[0] >= static_cast<std::int64_t>(s) ||
          (*pr)[1] >= static_cast<std::int64_t>(s)) {
        in.error(index_path("$.covers", k), "stratum index out of range");
        continue;
      }
      rel.emplace_back((*pr)[0], (*pr)[1]);
    }
  }
  IntMatrix n(s, std::vector<std::int64_t>(s, 0));
  for (std::size_t i = 0; i < s; ++i) n[i][i] = 1;
  if (nmap) {
    if (!nmap->is_object()) {
      in.error("$.n", "expected an object {\"i,j\": value}");
    } else {
      for (const auto& [key, v] : nmap->items()) {
        const std::string p = key_path("$.n", key);
        const auto comma = key.find(',');
        std::size_t i = 0, j = 0;
        try {
          if (comma == std::string::npos) throw std::invalid_argument(key);
          std::size_t used = 0;
          i = std::stoul(key.substr(0, comma), &used);
          j = std::stoul(key.substr(comma + 1));
        } catch (const std::exception&) {
          in.error(p, "keys must look like \"i,j\"");
          continue;
        }
        if (i >= s || j >= s) {
          in.error(p, "stratum index out of range");
          continue;
        }
        if (auto x = in.integer(v, p)) n[i][j] = *x;
      }
    }
  }
  if (!in.ok()) return std::nullopt;
  try {
    return SliceData(StratPoset(*labels, rel), n);
  } catch (const RejectedInput& e) {
    in.error(nmap ? "$.n" : "$.covers", e.what());
    return std::nullopt;
  }
}

std::optional<std::vector<std::int64_t>> vector_field(const Json& job, const std::string& name, std::size_t size,
                                                     Loader& in) {
  const Json* vs = in.field(job, "$", "vectors");
  if (!vs) return std::nullopt;
  const Json* v = in.field(*vs, "$.vectors", name);
  if (!v) return std::nullopt;
  return in.integers(*v, key_path("$.vectors", name), size);
}

}  // namespace

Action load_strat(const std::string& op, const Json& job, Loader& in, const RunOptions&) {
  StratJob sj;
  sj.op = op;
  if (op == "proportionality") {
    const Json* p = in.field(job, "$", "proportionality");
    if (!p) return {};
    const char* keys[] = {"eu", "local", "claimed"};
    for (int k = 0; k < 3; ++k)
      if (const Json* v = in.field(*p, "$.proportionality", keys[k]))
        if (auto x = in.integer(*v, key_path("$.proportionality", keys[k]))) sj.proportionality[k] = *x;
    if (!in.ok()) return {};
    return [sj](Report& r) { run(r, sj); };
  }

  if (const Json* det = in.field(job, "$", "determinantal", op == "det-table")) {
    std::array<int, 3> mnt{};
    const char* keys[] = {"m", "n", "t"};
    for (int k = 0; k < 3; ++k)
      if (const Json* v = in.field(*det, "$.determinantal", keys[k]))
        if (auto x = in.integer(*v, key_path("$.determinantal", keys[k]))) {
          if (*x < 1 || *x > 20)
            in.error(key_path("$.determinantal", keys[k]), "must lie in 1..20");
          else
            mnt[k] = static_cast<int>(*x);
        }
    if (in.ok() && mnt[2] > std::min(mnt[0], mnt[1]))
      in.error("$.determinantal.t", "t must not exceed min(m, n)");
    if (!in.ok()) return {};
    sj.determinantal = mnt;
    if (op != "det-table") sj.data = strat::determinantal_slice_data(mnt[0], mnt[1], mnt[2]);
  } else {
    sj.data = load_poset(job, in);
  }
  if (!in.ok()) return {};
  const std::size_t s = sj.data ? sj.data->poset().size() : 0;

  if (op == "radial-from-eu") sj.eu = vector_field(job, "eu", s, in);
  if (op == "eu-from-radial") sj.radial = vector_field(job, "radial", s, in);
  if (op == "radial-from-phn") {
    sj.phn = vector_field(job, "phn", s, in);
    if (const Json* v = in.field(job, "$", "dim")) sj.dim = in.integer(*v, "$.dim");
    if (const Json* v = in.field(job, "$", "chibar")) sj.chibar = in.integer(*v, "$.chibar");
  }
  if (op == "phn-from-radial") {
    sj.radial = vector_field(job, "radial", s, in);
    if (const Json* v = in.field(job, "$", "dims")) sj.dims = in.integers(*v, "$.dims", s);
    if (const Json* v = in.field(job, "$", "chibars")) sj.chibars = in.integers(*v, "$.chibars", s);
  }
  if ((op == "radial-from-phn" || op == "phn-from-radial") && in.ok() && sj.data->poset().top() < 0)
    in.error("$.covers", "the poset needs a unique maximal stratum");
  if (!in.ok()) return {};
  return [sj = std::move(sj)](Report& r) { run(r, sj); };
}

}  // namespace singindex::cli
