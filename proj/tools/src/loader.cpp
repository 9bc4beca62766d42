#include "loader.hpp"

#include "singindex/error.hpp"
#include "singindex/parse.hpp"

#include <cctype>
#include <set>

namespace singindex::cli {

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string key_path(const std::string& path, const std::string& key) { return path + "." + key; }

const Json* Loader::field(const Json& obj, const std::string& path, const std::string& key, bool required) {
  if (!obj.is_object()) {
    error(path, "expected an object");
    return nullptr;
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) error(key_path(path, key), "missing required field");
    return nullptr;
  }
  return &*it;
}

std::optional<Context> Loader::variables(const Json& job, const std::string& path) {
  const Json* v = field(job, path, "variables");
  if (!v) return std::nullopt;
  const std::string p = key_path(path, "variables");
  if (!v->is_array() || v->empty()) {
    error(p, "expected a non-empty array of variable names");
    return std::nullopt;
  }
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool good = true;
  for (std::size_t i = 0; i < v->size(); ++i) {
    const Json& x = (*v)[i];
    const std::string& name = x.is_string() ? x.get_ref<const std::string&>() : std::string();
    bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_');
    for (char c : name) ident = ident && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ident) {
      error(index_path(p, i), "variable names must be identifiers");
      good = false;
    } else if (!seen.insert(name).second) {
      error(index_path(p, i), "duplicate variable '" + name + "'");
      good = false;
    }
    names.push_back(name);
  }
  if (!good) return std::nullopt;
  return make_context(std::move(names));
}

std::optional<Polynomial> Loader::polynomial(const Json& v, const std::string& path, const Context& ctx) {
  if (v.is_number_integer()) return Polynomial::constant(ctx, Rational(v.get<long>()));
  if (!v.is_string()) {
    error(path, "expected a polynomial string");
    return std::nullopt;
  }
  try {
    return parse_polynomial(v.get<std::string>(), ctx);
  } catch (const RejectedInput& e) {
    error(path, e.what());
    return std::nullopt;
  }
}

std::optional<std::vector<Polynomial>> Loader::polynomials(const Json& v, const std::string& path, const Context& ctx,
                                                           std::optional<std::size_t> size) {
  if (!v.is_array()) {
    error(path, "expected an array of polynomials");
    return std::nullopt;
  }
  if (size && v.size() != *size) {
    error(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(v.size()));
    return std::nullopt;
  }
  std::vector<Polynomial> out;
  bool good = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto p = polynomial(v[i], index_path(path, i), ctx);
    if (p)
      out.push_back(std::move(*p));
    else
      good = false;
  }
  if (!good) return std::nullopt;
  return out;
}

std::optional<Rational> Loader::rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const RejectedInput& e) {
      error(path, e.what());
      return std::nullopt;
    }
  }
  error(path, "expected an integer or a rational string \"a/b\"");
  return std::nullopt;
}

std::optional<RationalMatrix> Loader::matrix(const Json& v, const std::string& path, std::size_t rows,
                                             std::size_t cols) {
  if (!v.is_array() || v.size() != rows) {
    error(path, "expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix (array of rows)");
    return std::nullopt;
  }
  RationalMatrix m(rows, cols);
  bool good = true;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = index_path(path, r);
    if (!v[r].is_array() || v[r].size() != cols) {
      error(rp, "expected a row of " + std::to_string(cols) + " entries");
      good = false;
      continue;
    }
    for (std::size_t c = 0; c < cols; ++c) {
      auto q = rational(v[r][c], index_path(rp, c));
      if (q)
        m(r, c) = *q;
      else
        good = false;
    }
  }
  if (!good) return std::nullopt;
  return m;
}

std::optional<std::int64_t> Loader::integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    error(path, "expected an integer");
    return std::nullopt;
  }
  return v.get<std::int64_t>();
}

std::optional<std::uint64_t> Loader::unsigned_integer(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned()) {
    error(path, "expected a non-negative integer");
    return std::nullopt;
  }
  return v.get<std::uint64_t>();
}

std::optional<std::vector<std::int64_t>> Loader::integers(const Json& v, const std::string& path,
                                                         std::optional<std::size_t> size) {
  if (!v.is_array()) {
    error(path, "expected an array of integers");
    return std::nullopt;
  }
  if (size && v.size() != *size) {
    error(path, "expected " + std::to_string(*size) + " entries, got " + std::to_string(v.size()));
    return std::nullopt;
  }
  std::vector<std::int64_t> out;
  bool good = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto x = integer(v[i], index_path(path, i));
    if (x)
      out.push_back(*x);
    else
      good = false;
  }
  if (!good) return std::nullopt;
  return out;
}

std::optional<std::vector<std::string>> Loader::strings(const Json& v, const std::string& path) {
  if (!v.is_array()) {
    error(path, "expected an array of strings");
    return std::nullopt;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      error(index_path(path, i), "expected a string");
      return std::nullopt;
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

}  // namespace singindex::cli
