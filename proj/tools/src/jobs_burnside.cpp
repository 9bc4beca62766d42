#include "commands.hpp"
#include "singindex/burnside.hpp"
#include "singindex/error.hpp"
#include "singindex/oracle/gset.hpp"

#include <map>

namespace singindex::cli {

namespace {

using burnside::BurnsideElement;
using burnside::BurnsideRing;
using burnside::Permutation;
using burnside::RingPtr;

using ElementSpec = std::map<std::size_t, std::int64_t>;

struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

struct OrbitSpec {
  std::vector<Permutation> stabilizer;
  ElementSpec index;
};

struct BurnsideJob {
  std::string command;
  std::string op;
  GroupSpec group;
  std::map<std::string, ElementSpec> elements;  // a, b, radial, chibar, chi
  std::optional<std::vector<Permutation>> subgroup;
  burnside::GStrataData strata;
  burnside::GSingularData singular;
  std::vector<OrbitSpec> orbits;
  bool chi_from_strata = false;
  std::optional<std::int64_t> chi_total;
  bool oracle = false;
};

std::optional<std::vector<Permutation>> load_perms(const Json& v, const std::string& path, std::size_t degree,
                                                   Loader& in) {
  if (!v.is_array()) {
    in.error(path, "expected an array of permutations");
    return std::nullopt;
  }
  std::vector<Permutation> out;
  bool good = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = index_path(path, i);
    auto images = in.integers(v[i], p, degree);
    if (!images) {
      good = false;
      continue;
    }
    Permutation perm;
    std::vector<bool> seen(degree, false);
    for (auto x : *images) {
      if (x < 1 || x > static_cast<std::int64_t>(degree) || seen[x - 1]) {
        in.error(p, "not a permutation of 1.." + std::to_string(degree));
        good = false;
        break;
      }
      seen[x - 1] = true;
      perm.push_back(static_cast<std::uint16_t>(x - 1));
    }
    out.push_back(std::move(perm));
  }
  if (!good) return std::nullopt;
  return out;
}

std::optional<GroupSpec> load_group(const Json& job, Loader& in) {
  const Json* g = in.field(job, "$", "group");
  if (!g) return std::nullopt;
  const Json* d = in.field(*g, "$.group", "degree");
  const Json* gens = in.field(*g, "$.group", "generators");
  if (!d || !gens) return std::nullopt;
  auto degree = in.unsigned_integer(*d, "$.group.degree");
  if (!degree) return std::nullopt;
  if (*degree == 0 || *degree > 64) {
    in.error("$.group.degree", "degree must lie in 1..64");
    return std::nullopt;
  }
  auto perms = load_perms(*gens, "$.group.generators", *degree, in);
  if (!perms) return std::nullopt;
  return GroupSpec{*degree, std::move(*perms)};
}

std::optional<ElementSpec> load_element(const Json& v, const std::string& path, Loader& in) {
  if (!v.is_object()) {
    in.error(path, "expected a Burnside element {\"classIndex\": coefficient}");
    return std::nullopt;
  }
  ElementSpec out;
  bool good = true;
  for (const auto& [key, c] : v.items()) {
    const std::string p = key_path(path, key);
    const bool digits = !key.empty() && key.find_first_not_of("0123456789") == std::string::npos && key.size() < 6;
    if (!digits) {
      in.error(p, "class index keys must be non-negative integers");
      good = false;
      continue;
    }
    if (auto x = in.integer(c, p))
      out[std::stoul(key)] += *x;
    else
      good = false;
  }
  if (!good) return std::nullopt;
  return out;
}

BurnsideElement make_element(const RingPtr& ring, const ElementSpec& spec) {
  auto e = BurnsideElement::zero(ring);
  for (const auto& [k, c] : spec) e = e + BurnsideElement::basis(ring, k, c);
  return e;
}

Json element_json(const BurnsideElement& e, const std::string& group = "G") {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < e.coefficients().size(); ++i)
    if (e[i] != 0) coeffs[std::to_string(i)] = e[i];
  return {{"text", e.to_string(group)}, {"coefficients", coeffs}};
}

Json perm_json(const Permutation& p) {
  Json out = Json::array();
  for (auto x : p) out.push_back(x + 1);
  return out;
}

Json classes_json(const BurnsideRing& ring, const std::string& group = "G") {
  Json out = Json::array();
  for (const auto& c : ring.classes()) {
    Json gens = Json::array();
    for (auto g : c.generators) gens.push_back(perm_json(ring.group().element(g)));
    out.push_back({{"index", c.index},
                   {"label", ring.label(c.index, group)},
                   {"order", c.order},
                   {"conjugates", c.conjugates},
                   {"normalizer_order", c.normalizer_order},
                   {"generators", gens}});
  }
  return out;
}

RingPtr make_ring(const GroupSpec& g) {
  return BurnsideRing::create(burnside::FiniteGroup(g.degree, g.generators));
}

void put_result(Report& r, const BurnsideElement& e, const std::string& theorem, const std::string& group = "G") {
  r.values["result"] = e.to_string(group);
  r.values["element"] = element_json(e, group);
  r.provenance["result"] = theorem;
}

void oracle_product(Report& r, const RingPtr& ring, const BurnsideElement& a, const BurnsideElement& b) {
  const auto& g = ring->group();
  std::vector<burnside::ElementSet> reps;
  for (const auto& c : ring->classes()) reps.push_back(c.representative);
  bool agree = true;
  for (std::size_t i = 0; i < ring->size(); ++i)
    for (std::size_t j = 0; j < ring->size(); ++j) {
      if (a[i] == 0 || b[j] == 0) continue;
      auto counts = oracle::orbit_type_counts(
          g, oracle::product(oracle::coset_space(g, reps[i]), oracle::coset_space(g, reps[j])), reps);
      agree = agree && BurnsideElement(ring, counts) ==
                           BurnsideElement::basis(ring, i) * BurnsideElement::basis(ring, j);
    }
  r.oracle = {{"method", "orbit counting on explicit product G-sets"}, {"agree", agree}};
  if (!agree) r.status = Status::Internal;
}

void run(Report& r, const BurnsideJob& job) {
  const RingPtr ring = make_ring(job.group);
  r.values["group_order"] = ring->group().order();
  r.values["classes"] = ring->size();
  auto elem = [&](const std::string& name) { return make_element(ring, job.elements.at(name)); };

  if (job.op == "classes") {
    r.values["subgroup_classes"] = classes_json(*ring);
    r.provenance["subgroup_classes"] = "conjugacy classes of subgroups, sorted by order and canonical element list";
  } else if (job.op == "marks") {
    r.values["subgroup_classes"] = classes_json(*ring);
    r.values["marks"] = matrix_json(ring->marks());
    r.notes.emplace_back("marks[K][H] = |(G/K)^H|: rows are the G-sets G/K, columns the subgroups H");
  } else if (job.op == "mul") {
    const auto a = elem("a"), b = elem("b");
    const auto p = burnside_mul(a, b);
    put_result(r, p, "product in the Burnside ring via the table of marks");
    r.certificates.push_back({{"label", "mark vectors"},
                              {"a", ring->mark_vector(a.coefficients())},
                              {"b", ring->mark_vector(b.coefficients())},
                              {"product", ring->mark_vector(p.coefficients())}});
    if (job.oracle) oracle_product(r, ring, a, b);
  } else if (job.op == "restrict") {
    const RingPtr sub = burnside::subgroup_ring(*ring, *job.subgroup);
    const auto res = burnside::restriction(elem("a"), sub);
    put_result(r, res, "restriction of G-sets to a subgroup", "H");
    r.values["subgroup_order"] = sub->group().order();
    r.values["subgroup_classes"] = classes_json(*sub, "H");
    if (job.oracle) {
      const auto& g = ring->group();
      const auto a = elem("a");
      std::vector<burnside::ElementSet> hreps;
      for (const auto& c : sub->classes()) hreps.push_back(c.representative);
      std::vector<std::int64_t> total(sub->size(), 0);
      const auto embed = g.embedding_of(sub->group());
      for (std::size_t k = 0; k < ring->size(); ++k) {
        if (a[k] == 0) continue;
        auto counts = oracle::orbit_type_counts(
            sub->group(), oracle::restrict_to(oracle::coset_space(g, ring->classes()[k].representative), embed),
            hreps);
        for (std::size_t i = 0; i < counts.size(); ++i) total[i] += a[k] * counts[i];
      }
      const bool agree = total == res.coefficients();
      r.oracle = {{"method", "orbit counting on restricted coset spaces"}, {"agree", agree}};
      if (!agree) r.status = Status::Internal;
    }
  } else if (job.op == "induce") {
    const RingPtr sub = burnside::subgroup_ring(*ring, *job.subgroup);
    const auto a = make_element(sub, job.elements.at("a"));
    put_result(r, burnside::induction(a, ring), "induction G x_H (-) of H-sets");
    r.values["subgroup_classes"] = classes_json(*sub, "H");
  } else if (job.op == "r0") {
    const auto a = elem("a");
    r.values["r0"] = burnside::r0(a);
    r.values["element"] = element_json(a);
    r.provenance["r0"] = "r0([G/H]) = 1, extended additively";
  } else if (job.op == "euler") {
    const auto chi = burnside::equivariant_euler(ring, job.strata);
    put_result(r, chi, "equivariant Euler characteristic: sum of chi(V^([H])/G) [G/H]");
    const std::int64_t underlying = burnside::underlying_cardinality(chi);
    r.values["underlying_euler"] = underlying;
    if (job.chi_total) {
      const bool agree = *job.chi_total == underlying;
      r.certificates.push_back({{"label", "forgetful map to chi(V)"}, {"chi", *job.chi_total}, {"agree", agree}});
      if (!agree) r.notes.emplace_back("the strata data does not reproduce the supplied chi(V)");
    }
  } else if (job.op == "radial") {
    put_result(r, burnside::equivariant_radial_index(ring, job.singular),
               "equivariant radial index: sum of orbit indices times [G/G_p]");
  } else if (job.op == "ph-check") {
    std::vector<BurnsideElement> local;
    for (const auto& o : job.orbits) {
      const RingPtr sub = burnside::subgroup_ring(*ring, o.stabilizer);
      local.push_back(make_element(sub, o.index));
    }
    const auto sum = burnside::induced_index_sum(ring, local);
    const auto chi = job.chi_from_strata ? burnside::equivariant_euler(ring, job.strata) : elem("chi");
    r.values["holds"] = sum == chi;
    r.values["index_sum"] = element_json(sum);
    r.values["chi"] = element_json(chi);
    r.provenance["holds"] = "equivariant Poincare-Hopf theorem: sum of induced local indices = chi^G(M)";
  } else if (job.op == "gsv-from-radial") {
    put_result(r, burnside::equivariant_gsv_from_radial(elem("radial"), elem("chibar")),
               "equivariant GSV index = radial index + reduced equivariant Euler characteristic of the Milnor fibre");
  }
}

bool load_named(const Json& job, const std::string& name, BurnsideJob& bj, Loader& in) {
  const Json* v = in.field(job, "$", name);
  if (!v) return false;
  auto e = load_element(*v, "$." + name, in);
  if (!e) return false;
  bj.elements[name] = std::move(*e);
  return true;
}

void load_subgroup(const Json& job, BurnsideJob& bj, Loader& in) {
  const Json* s = in.field(job, "$", "subgroup");
  if (!s) return;
  if (const Json* g = in.field(*s, "$.subgroup", "generators"))
    if (auto p = load_perms(*g, "$.subgroup.generators", bj.group.degree, in)) bj.subgroup = std::move(*p);
}

bool load_records(const Json& v, const std::string& path, const char* value_key,
                  std::vector<std::pair<std::size_t, std::int64_t>>& out, Loader& in) {
  if (!v.is_array()) {
    in.error(path, "expected an array of records");
    return false;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = index_path(path, i);
    const Json* cls = in.field(v[i], p, "isotropyClass");
    const Json* val = in.field(v[i], p, value_key);
    if (!cls || !val) continue;
    auto c = in.unsigned_integer(*cls, key_path(p, "isotropyClass"));
    auto x = in.integer(*val, key_path(p, value_key));
    if (c && x) out.emplace_back(*c, *x);
  }
  return in.ok();
}

Action load(const std::string& command, const std::string& op, const Json& job, Loader& in,
            const RunOptions& options) {
  BurnsideJob bj;
  bj.command = command;
  bj.op = op;
  bj.oracle = options.oracle;
  auto g = load_group(job, in);
  if (!g) return {};
  bj.group = std::move(*g);

  if (op == "mul") {
    load_named(job, "a", bj, in);
    load_named(job, "b", bj, in);
  } else if (op == "restrict" || op == "induce") {
    load_named(job, "a", bj, in);
    load_subgroup(job, bj, in);
  } else if (op == "r0") {
    load_named(job, "a", bj, in);
  } else if (op == "euler") {
    if (const Json* s = in.field(job, "$", "strata")) {
      std::vector<std::pair<std::size_t, std::int64_t>> recs;
      if (load_records(*s, "$.strata", "chiOrbit", recs, in))
        for (auto [c, x] : recs) bj.strata.push_back({c, x});
    }
    if (const Json* c = in.field(job, "$", "chi", false)) bj.chi_total = in.integer(*c, "$.chi");
  } else if (op == "radial") {
    if (const Json* s = in.field(job, "$", "singular")) {
      std::vector<std::pair<std::size_t, std::int64_t>> recs;
      if (load_records(*s, "$.singular", "localIndex", recs, in))
        for (auto [c, x] : recs) bj.singular.push_back({c, x});
    }
  } else if (op == "ph-check") {
    if (const Json* os = in.field(job, "$", "orbits")) {
      if (!os->is_array()) in.error("$.orbits", "expected an array of orbit records");
      for (std::size_t i = 0; os->is_array() && i < os->size(); ++i) {
        const std::string p = index_path("$.orbits", i);
        const Json* st = in.field((*os)[i], p, "stabilizer");
        const Json* ix = in.field((*os)[i], p, "index");
        if (!st || !ix) continue;
        OrbitSpec o;
        if (const Json* gens = in.field(*st, key_path(p, "stabilizer"), "generators"))
          if (auto perms = load_perms(*gens, key_path(key_path(p, "stabilizer"), "generators"), bj.group.degree, in))
            o.stabilizer = std::move(*perms);
        if (auto e = load_element(*ix, key_path(p, "index"), in)) o.index = std::move(*e);
        bj.orbits.push_back(std::move(o));
      }
    }
    if (job.contains("chi")) {
      load_named(job, "chi", bj, in);
    } else if (const Json* s = in.field(job, "$", "strata", false)) {
      std::vector<std::pair<std::size_t, std::int64_t>> recs;
      if (load_records(*s, "$.strata", "chiOrbit", recs, in))
        for (auto [c, x] : recs) bj.strata.push_back({c, x});
      bj.chi_from_strata = true;
    } else {
      in.error("$.chi", "either \"chi\" or \"strata\" is required");
    }
  } else if (op == "gsv-from-radial") {
    load_named(job, "radial", bj, in);
    load_named(job, "chibar", bj, in);
  }
  if (!in.ok()) return {};
  return [bj = std::move(bj)](Report& r) { run(r, bj); };
}

}  // namespace

Action load_burnside(const std::string& op, const Json& job, Loader& in, const RunOptions& options) {
  return load("burnside", op, job, in, options);
}

Action load_equivariant(const std::string& op, const Json& job, Loader& in, const RunOptions& options) {
  return load("equivariant", op, job, in, options);
}

}  // namespace singindex::cli
