#include "commands.hpp"
#include "singindex/error.hpp"
#include "singindex/icis_index.hpp"
#include "singindex/oracle/macaulay.hpp"

#include <numeric>

namespace singindex::cli {

namespace {

using icis::Quantity;

struct IcisJob {
  icis::ICISGerm germ;
  bool has_form = false;
  smooth::OneFormGerm form;
  icis::FormCollection collection;
  std::vector<Quantity> wants;
  std::uint64_t seed = 0;
  gb::Options options;
  bool oracle = false;
};

Json certificates_json(const icis::CertificateLog& log) {
  Json out = Json::array();
  for (const auto& c : log)
    out.push_back({{"label", c.label}, {"generators", c.generators}, {"colength", c.colength.to_string()}});
  return out;
}

std::vector<Polynomial> gsv_generators(const IcisJob& job) {
  const std::size_t big_n = job.germ.ambient_dim();
  const std::size_t rows = job.germ.equations.size() + 1;
  std::vector<Polynomial> entries;
  for (const auto& f : job.germ.equations)
    for (std::size_t j = 0; j < big_n; ++j) entries.push_back(f.derivative(j));
  for (const auto& a : job.form.coefficients) entries.push_back(a);
  std::vector<Polynomial> gens = job.germ.equations;
  for (auto& p : minors(PolyMatrix(rows, big_n, std::move(entries)), rows)) gens.push_back(std::move(p));
  return gens;
}

void run(Report& r, const IcisJob& job) {
  r.values["ambient_dim"] = job.germ.ambient_dim();
  r.values["dim"] = job.germ.dim();
  if (!job.has_form) {
    icis::CertificateLog log;
    const auto sing = icis::singular_locus_colength(job.germ, job.options, &log);
    const auto gsv = icis::gsv_index_collection(job.germ, job.collection, job.options, &log);
    r.values["singular_locus_colength"] = sing.to_string();
    r.values["gsv"] = gsv.is_finite() ? Json(gsv.value()) : Json("INFINITE");
    r.provenance["gsv"] = "GSV index of a collection of 1-forms: colength of the minors of each stacked group";
    r.certificates = certificates_json(log);
    if (gsv.is_infinite()) r.status = Status::Infinite;
    return;
  }
  const auto rep = icis::icis_report(job.germ, job.form, job.wants, job.seed, job.options);
  r.values["singular_locus_colength"] = rep.singular_locus.to_string();
  r.values["seed"] = job.seed;
  if (!rep.gsv_isolated) {
    r.status = Status::Infinite;
    r.values["gsv"] = "INFINITE";
  }
  if (rep.gsv) {
    r.values["gsv"] = *rep.gsv;
    r.provenance["gsv"] = "GSV index formula for 1-forms on an ICIS: colength of (f, maximal minors of (df, omega))";
  }
  if (rep.milnor) {
    r.values["milnor"] = *rep.milnor;
    r.provenance["milnor"] = "Le-Greuel formula along generic linear sections";
    r.values["milnor_slices"] = rep.milnor_slices;
  }
  if (rep.radial) {
    r.values["radial"] = *rep.radial;
    r.provenance["radial"] = "radial index = GSV index - Milnor number";
  }
  if (rep.homological) {
    r.values["homological"] = *rep.homological;
    r.provenance["homological"] = "homological index equals the GSV index on an ICIS";
  }
  r.certificates = certificates_json(rep.certificates);
  r.notes.insert(r.notes.end(), rep.notes.begin(), rep.notes.end());
  if (job.oracle) {
    auto m = oracle::macaulay_colength(gsv_generators(job));
    Json o;
    o["method"] = "Macaulay matrix truncation of the GSV ideal";
    o["gsv"] = m ? Json(*m) : Json("no stabilization");
    const bool agree = m ? (rep.gsv && *rep.gsv == static_cast<std::int64_t>(*m)) : !rep.gsv_isolated;
    o["agree"] = agree;
    r.oracle = o;
    if (!agree) r.status = Status::Internal;
  }
}

}  // namespace

Action load_icis(const Json& job, Loader& in, const RunOptions& options) {
  IcisJob ij;
  ij.options.degree_cap = options.degree_cap;
  ij.oracle = options.oracle;
  auto ctx = in.variables(job);
  const Json* eqs = in.field(job, "$", "equations");
  const Json* form = in.field(job, "$", "form", false);
  const Json* coll = in.field(job, "$", "collection", false);
  if (!form && !coll) in.error("$.form", "either \"form\" or \"collection\" is required");
  if (form && coll) in.error("$", "give only one of \"form\" and \"collection\"");

  if (const Json* w = in.field(job, "$", "want", false)) {
    if (auto names = in.strings(*w, "$.want")) {
      for (std::size_t i = 0; i < names->size(); ++i) {
        const auto& s = (*names)[i];
        if (s == "gsv")
          ij.wants.push_back(Quantity::Gsv);
        else if (s == "milnor")
          ij.wants.push_back(Quantity::Milnor);
        else if (s == "radial")
          ij.wants.push_back(Quantity::Radial);
        else if (s == "homological")
          ij.wants.push_back(Quantity::Homological);
        else
          in.error(index_path("$.want", i), "unknown quantity '" + s + "'");
      }
    }
  } else {
    ij.wants = {Quantity::Gsv, Quantity::Milnor, Quantity::Radial, Quantity::Homological};
  }
  if (coll) {
    for (auto q : ij.wants)
      if (q != Quantity::Gsv) {
        in.error("$.want", "collections support only \"gsv\"");
        break;
      }
  }
  if (const Json* s = in.field(job, "$", "seed", false))
    if (auto v = in.unsigned_integer(*s, "$.seed")) ij.seed = *v;
  if (options.seed_given) ij.seed = options.seed;

  if (!ctx) return {};
  const std::size_t big_n = (*ctx)->size();
  ij.germ.context = *ctx;
  if (eqs) {
    if (auto e = in.polynomials(*eqs, "$.equations", *ctx)) {
      ij.germ.equations = std::move(*e);
      if (ij.germ.equations.size() >= big_n)
        in.error("$.equations", "need fewer equations than variables (V must have positive dimension)");
      for (std::size_t i = 0; i < ij.germ.equations.size(); ++i)
        if (ij.germ.equations[i].constant_term() != 0)
          in.error(index_path("$.equations", i), "equation does not vanish at the origin");
    }
  }
  if (form) {
    if (auto w = in.polynomials(*form, "$.form", *ctx, big_n)) {
      ij.has_form = true;
      ij.form = smooth::OneFormGerm{std::move(*w), smooth::GroundField::Complex};
    }
  }
  if (coll && eqs && ij.germ.equations.size() < big_n) {
    const std::size_t n = big_n - ij.germ.equations.size();
    const Json* part = in.field(*coll, "$.collection", "partition");
    const Json* groups = in.field(*coll, "$.collection", "groups");
    if (part && groups) {
      if (auto ks = in.integers(*part, "$.collection.partition")) {
        const std::int64_t total = std::accumulate(ks->begin(), ks->end(), std::int64_t{0});
        if (total != static_cast<std::int64_t>(n))
          in.error("$.collection.partition", "partition sums to " + std::to_string(total) + " but dim V = " +
                                                 std::to_string(n) +
                                                 "; the collection index theorem requires k_1 + ... + k_s = dim V");
        for (std::size_t i = 0; i < ks->size(); ++i)
          if ((*ks)[i] < 1 || (*ks)[i] > static_cast<std::int64_t>(n))
            in.error(index_path("$.collection.partition", i), "each part must lie in 1..dim V");
        if (!groups->is_array() || groups->size() != ks->size()) {
          in.error("$.collection.groups", "expected one group of forms per partition part");
        } else if (in.ok()) {
          for (std::size_t i = 0; i < ks->size(); ++i) {
            ij.collection.partition.push_back(static_cast<std::size_t>((*ks)[i]));
            const std::size_t want = n - static_cast<std::size_t>((*ks)[i]) + 1;
            const std::string gp = index_path("$.collection.groups", i);
            const Json& g = (*groups)[i];
            if (!g.is_array() || g.size() != want) {
              in.error(gp, "group must hold " + std::to_string(want) + " forms");
              continue;
            }
            std::vector<smooth::OneFormGerm> forms;
            for (std::size_t f = 0; f < want; ++f)
              if (auto w = in.polynomials(g[f], index_path(gp, f), *ctx, big_n))
                forms.push_back({std::move(*w), smooth::GroundField::Complex});
            ij.collection.groups.push_back(std::move(forms));
          }
        }
      }
    }
  }
  if (!in.ok()) return {};
  return [ij = std::move(ij)](Report& r) { run(r, ij); };
}

}  // namespace singindex::cli
