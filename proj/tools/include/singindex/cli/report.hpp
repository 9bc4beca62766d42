#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace singindex::cli {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Rejected, Infinite, GenericityFailure, DegreeCap, Internal };

std::string status_name(Status s);
Status status_from_name(const std::string& name);
/// 0 ok, 2 rejected, 3 infinite / non-isolated, 4 genericity or degree cap, 1 internal.
int exit_code(Status s);

struct Diagnostic {
  std::string path;
  std::string message;
  bool operator==(const Diagnostic&) const = default;
};
using Diagnostics = std::vector<Diagnostic>;

struct Report {
  std::string command;
  std::string op;
  Status status = Status::Ok;
  Json values = Json::object();
  Json certificates = Json::array();
  Json provenance = Json::object();  // quantity -> defining theorem
  std::vector<std::string> notes;
  Diagnostics diagnostics;
  Json oracle;  // null unless --oracle was given

  bool operator==(const Report&) const = default;
};

Json to_json(const Report& r);
/// Throws nlohmann::json::exception on malformed input.
Report report_from_json(const Json& j);
std::string to_text(const Report& r);

}  // namespace singindex::cli
