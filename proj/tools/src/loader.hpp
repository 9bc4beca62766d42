#pragma once

#include "singindex/cli/report.hpp"
#include "singindex/matrix.hpp"
#include "singindex/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace singindex::cli {

/// Reads job fields, recording a diagnostic with a JSON path for every problem.
class Loader {
 public:
  explicit Loader(Diagnostics& diags) : diags_(diags) {}

  void error(const std::string& path, const std::string& message) { diags_.push_back({path, message}); }
  bool ok() const { return diags_.empty(); }

  const Json* field(const Json& obj, const std::string& path, const std::string& key, bool required = true);
  std::optional<Context> variables(const Json& job, const std::string& path = "$");
  std::optional<Polynomial> polynomial(const Json& v, const std::string& path, const Context& ctx);
  std::optional<std::vector<Polynomial>> polynomials(const Json& v, const std::string& path, const Context& ctx,
                                                     std::optional<std::size_t> size = std::nullopt);
  std::optional<Rational> rational(const Json& v, const std::string& path);
  std::optional<RationalMatrix> matrix(const Json& v, const std::string& path, std::size_t rows, std::size_t cols);
  std::optional<std::int64_t> integer(const Json& v, const std::string& path);
  std::optional<std::uint64_t> unsigned_integer(const Json& v, const std::string& path);
  std::optional<std::vector<std::int64_t>> integers(const Json& v, const std::string& path,
                                                   std::optional<std::size_t> size = std::nullopt);
  std::optional<std::vector<std::string>> strings(const Json& v, const std::string& path);

 private:
  Diagnostics& diags_;
};

std::string index_path(const std::string& path, std::size_t i);
std::string key_path(const std::string& path, const std::string& key);

}  // namespace singindex::cli
