#include "commands.hpp"
#include "singindex/error.hpp"
#include "singindex/linear_action.hpp"
#include "singindex/oracle/boundary_degree.hpp"
#include "singindex/oracle/macaulay.hpp"
#include "singindex/quotient_algebra.hpp"
#include "singindex/smooth_index.hpp"

#include <numeric>

namespace singindex::cli {

namespace {

using smooth::GroundField;
using smooth::IndexResult;
using smooth::PointStatus;

struct SmoothJob {
  std::string command;
  GroundField field = GroundField::Complex;
  Context ctx;
  std::string kind;
  std::vector<Polynomial> components;
  smooth::SectionCollection collection;
  std::vector<RationalMatrix> action;
  bool has_action = false;
  gb::Options options;
  bool oracle = false;
};

std::string status_text(PointStatus s) {
  switch (s) {
    case PointStatus::Isolated: return "isolated";
    case PointStatus::Nonsingular: return "nonsingular";
    case PointStatus::NotIsolated: return "not_isolated";
  }
  return "";
}

void put_result(Report& r, const IndexResult& res, const std::string& theorem) {
  r.values["point"] = status_text(res.status);
  r.values["colength"] = res.colength.to_string();
  if (res.isolated()) {
    r.values["index"] = res.value;
    r.provenance["index"] = theorem;
  } else {
    r.status = Status::Infinite;
    r.values["index"] = "INFINITE";
    r.notes.emplace_back("the singular point is not isolated: the defining ideal has infinite colength");
  }
}

void oracle_colength(Report& r, const std::vector<Polynomial>& gens, const IndexResult& res) {
  auto m = oracle::macaulay_colength(gens);
  Json o;
  o["method"] = "Macaulay matrix truncation";
  o["colength"] = m ? Json(*m) : Json("no stabilization");
  const bool agree = m ? (res.colength.is_finite() && res.colength.value() == *m) : res.colength.is_infinite();
  o["agree"] = agree;
  r.oracle = o;
  if (!agree) r.status = Status::Internal;
}

void put_action(Report& r, const SmoothJob& job, const std::vector<Polynomial>& gens,
                const smooth::ELKForm* form) {
  if (!job.has_action) return;
  smooth::LinearAction act(job.ctx->size(), job.action);
  const auto q = gb::quotient_algebra(gb::Ideal(gens), job.options);
  if (!act.preserves(q)) throw RejectedInput("the group action does not preserve the ideal");
  r.values["group_order"] = act.order();
  r.values["invariant_dimension"] = smooth::invariant_dimension(q, act);
  r.provenance["invariant_dimension"] = "r0 of the algebra as a G-module: dim of the G-invariant subalgebra";
  if (form) {
    r.values["invariant_signature"] = smooth::invariant_signature(*form, act);
    r.provenance["invariant_signature"] = "signature of the residue pairing on the G-invariant subspace";
  }
}

Json matrix_strings(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

void run_elk(Report& r, const SmoothJob& job) {
  smooth::VectorFieldGerm f{job.components, GroundField::Real};
  const IndexResult res = smooth::elk_index(f, job.options);
  put_result(r, res, "Eisenbud-Levine-Khimshiashvili theorem: signature of the residue pairing");
  if (res.status == PointStatus::Isolated) {
    const auto form = smooth::elk_form(f, job.options);
    Json basis = Json::array();
    for (const auto& m : form.algebra.basis())
      basis.push_back(Polynomial::term(job.ctx, m, Rational(1)).to_string());
    r.values["dimension"] = form.algebra.dimension();
    r.values["basis"] = basis;
    Json phi = Json::array();
    for (const auto& v : form.functional) phi.push_back(to_string(v));
    r.values["functional"] = phi;
    r.values["gram"] = matrix_strings(form.gram);
    const auto inertia = symmetric_signature(form.gram);
    r.certificates.push_back({{"label", "inertia of the residue pairing"},
                              {"positive", inertia.positive},
                              {"negative", inertia.negative},
                              {"zero", inertia.zero}});
    put_action(r, job, job.components, &form);
  }
  if (job.oracle) {
    const std::size_t n = job.ctx->size();
    Json o;
    o["method"] = "boundary degree on a rational box";
    if (n == 2 || n == 3) {
      auto d = oracle::stable_boundary_degree(job.components, Rational(1, 8));
      o["degree"] = d ? Json(*d) : Json("inconclusive");
      const bool agree = !d || !res.isolated() || *d == res.value;
      o["agree"] = agree;
      if (!agree) r.notes.emplace_back("boundary degree differs; the box may contain further real zeros");
    } else {
      o["degree"] = "unsupported dimension";
    }
    r.oracle = o;
  }
}

std::vector<Polynomial> collection_generators(const smooth::SectionCollection& c) {
  std::vector<Polynomial> gens;
  for (const auto& g : c.groups)
    for (auto& p : minors(g, g.cols())) gens.push_back(std::move(p));
  return gens;
}

void run(Report& r, const SmoothJob& job) {
  const std::size_t n = job.ctx->size();
  r.values["variables"] = job.ctx->size();
  r.values["field"] = job.field == GroundField::Real ? "R" : "C";
  r.values["kind"] = job.kind;
  if (job.kind == "collection") {
    const IndexResult res = smooth::collection_index(job.collection, job.options);
    put_result(r, res, "index of a collection of sections: colength of the ideal of maximal minors");
    r.certificates.push_back(
        {{"label", "ideal of (m-k_i+1)-minors"}, {"colength", res.colength.to_string()}});
    if (job.oracle) oracle_colength(r, collection_generators(job.collection), res);
    return;
  }
  if (job.command == "elk" || job.field == GroundField::Real) {
    run_elk(r, job);
    if (job.kind == "one_form")
      r.notes.emplace_back("a real 1-form has the index of its dual vector field (A_1, ..., A_n)");
    return;
  }
  if (job.kind == "vector_field") {
    const IndexResult res = smooth::palamodov_index({job.components, GroundField::Complex}, job.options);
    put_result(r, res, "Palamodov theorem: index = dim O/(X_1, ..., X_n)");
    if (res.isolated()) put_action(r, job, job.components, nullptr);
    if (job.oracle) oracle_colength(r, job.components, res);
  } else {
    const IndexResult res = smooth::complex_form_index({job.components, GroundField::Complex}, job.options);
    put_result(r, res, "Palamodov theorem for 1-forms: index = dim O/(A_1, ..., A_n)");
    if (res.isolated()) {
      r.values["real_part_index"] = smooth::real_part_index(res.value, n);
      r.provenance["real_part_index"] = "index of Re(omega) on R^2n is (-1)^n times the complex index";
      put_action(r, job, job.components, nullptr);
    }
    if (job.oracle) oracle_colength(r, job.components, res);
  }
}

std::optional<smooth::SectionCollection> load_collection(const Json& data, const std::string& path, const Context& ctx,
                                                         Loader& in) {
  const std::size_t n = ctx->size();
  const Json* rank = in.field(data, path, "rank");
  const Json* part = in.field(data, path, "partition");
  const Json* groups = in.field(data, path, "groups");
  if (!rank || !part || !groups) return std::nullopt;
  auto m = in.unsigned_integer(*rank, key_path(path, "rank"));
  auto ks = in.integers(*part, key_path(path, "partition"));
  if (!m || !ks) return std::nullopt;
  if (*m == 0) {
    in.error(key_path(path, "rank"), "rank must be positive");
    return std::nullopt;
  }
  const std::int64_t total = std::accumulate(ks->begin(), ks->end(), std::int64_t{0});
  bool good = true;
  if (total != static_cast<std::int64_t>(n)) {
    in.error(key_path(path, "partition"),
             "partition sums to " + std::to_string(total) + " but there are " + std::to_string(n) +
                 " variables; the collection index theorem requires k_1 + ... + k_s = n");
    good = false;
  }
  for (std::size_t i = 0; i < ks->size(); ++i)
    if ((*ks)[i] < 1 || (*ks)[i] > static_cast<std::int64_t>(*m)) {
      in.error(index_path(key_path(path, "partition"), i), "each part must lie in 1..rank");
      good = false;
    }
  const std::string gp = key_path(path, "groups");
  if (!groups->is_array() || groups->size() != ks->size()) {
    in.error(gp, "expected one group of sections per partition part");
    return std::nullopt;
  }
  if (!good) return std::nullopt;
  smooth::SectionCollection c;
  c.rank = *m;
  for (auto k : *ks) c.partition.push_back(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < ks->size(); ++i) {
    const std::size_t cols = *m - static_cast<std::size_t>((*ks)[i]) + 1;
    const Json& g = (*groups)[i];
    const std::string p = index_path(gp, i);
    if (!g.is_array() || g.size() != cols) {
      in.error(p, "group " + std::to_string(i) + " must hold " + std::to_string(cols) + " sections");
      good = false;
      continue;
    }
    PolyMatrix mat(ctx, *m, cols);
    for (std::size_t s = 0; s < cols; ++s) {
      auto sec = in.polynomials(g[s], index_path(p, s), ctx, *m);
      if (!sec) {
        good = false;
        continue;
      }
      for (std::size_t row = 0; row < *m; ++row) mat(row, s) = (*sec)[row];
    }
    c.groups.push_back(std::move(mat));
  }
  if (!good) return std::nullopt;
  return c;
}

}  // namespace

Action load_smooth(const std::string& command, const Json& job, Loader& in, const RunOptions& options) {
  SmoothJob sj;
  sj.command = command;
  sj.options.degree_cap = options.degree_cap;
  sj.oracle = options.oracle;

  if (const Json* f = in.field(job, "$", "field", false)) {
    if (*f == "R")
      sj.field = GroundField::Real;
    else if (*f == "C")
      sj.field = GroundField::Complex;
    else
      in.error("$.field", "field must be \"R\" or \"C\"");
    if (command == "elk" && sj.field != GroundField::Real) in.error("$.field", "elk requires the real field \"R\"");
  } else if (command == "elk") {
    sj.field = GroundField::Real;
  }

  if (const Json* k = in.field(job, "$", "kind", command == "smooth-index")) {
    if (!k->is_string() || (*k != "vector_field" && *k != "one_form" && *k != "collection"))
      in.error("$.kind", "kind must be \"vector_field\", \"one_form\" or \"collection\"");
    else
      sj.kind = k->get<std::string>();
  } else if (command != "smooth-index") {
    sj.kind = command == "elk" ? "vector_field" : "collection";
  }
  if (command == "collection" && !sj.kind.empty() && sj.kind != "collection")
    in.error("$.kind", "the collection command needs kind \"collection\"");
  if (command == "elk" && sj.kind == "collection") in.error("$.kind", "elk takes a vector field or a 1-form");
  if (sj.kind == "collection" && sj.field == GroundField::Real)
    in.error("$.field", "collections are holomorphic: use field \"C\"");

  auto ctx = in.variables(job);
  const Json* data = in.field(job, "$", "data");
  if (!ctx) return {};
  sj.ctx = *ctx;
  const std::size_t n = sj.ctx->size();
  if (data && !sj.kind.empty()) {
    if (sj.kind == "collection") {
      if (!data->is_object())
        in.error("$.data", "expected {\"rank\", \"partition\", \"groups\"}");
      else if (auto c = load_collection(*data, "$.data", sj.ctx, in))
        sj.collection = std::move(*c);
    } else if (auto comps = in.polynomials(*data, "$.data", sj.ctx, n)) {
      sj.components = std::move(*comps);
    }
  }
  if (const Json* a = in.field(job, "$", "action", false)) {
    if (!a->is_array()) {
      in.error("$.action", "expected a list of n x n matrices");
    } else {
      sj.has_action = true;
      for (std::size_t i = 0; i < a->size(); ++i)
        if (auto m = in.matrix((*a)[i], index_path("$.action", i), n, n)) sj.action.push_back(std::move(*m));
    }
    if (sj.kind == "collection") in.error("$.action", "group actions are supported for a single germ only");
  }
  if (!in.ok()) return {};
  return [sj = std::move(sj)](Report& r) { run(r, sj); };
}

}  // namespace singindex::cli
