#include "singindex/cli/report.hpp"

#include <sstream>
#include <stdexcept>

namespace singindex::cli {

namespace {

const std::pair<Status, const char*> kNames[] = {
    {Status::Ok, "ok"},
    {Status::Rejected, "rejected"},
    {Status::Infinite, "infinite"},
    {Status::GenericityFailure, "genericity_failure"},
    {Status::DegreeCap, "degree_cap"},
    {Status::Internal, "internal_error"},
};

void print_value(std::ostream& os, const Json& v) {
  if (v.is_string())
    os << v.get<std::string>();
  else
    os << v.dump();
}

}  // namespace

std::string status_name(Status s) {
  for (const auto& [k, n] : kNames)
    if (k == s) return n;
  return "internal_error";
}

Status status_from_name(const std::string& name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  throw std::invalid_argument("unknown status '" + name + "'");
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::Rejected: return 2;
    case Status::Infinite: return 3;
    case Status::GenericityFailure:
    case Status::DegreeCap: return 4;
    case Status::Internal: return 1;
  }
  return 1;
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  if (!r.op.empty()) j["op"] = r.op;
  j["status"] = status_name(r.status);
  j["values"] = r.values;
  j["certificates"] = r.certificates;
  j["provenance"] = r.provenance;
  j["notes"] = r.notes;
  Json d = Json::array();
  for (const auto& x : r.diagnostics) d.push_back({{"path", x.path}, {"message", x.message}});
  j["diagnostics"] = d;
  if (!r.oracle.is_null()) j["oracle"] = r.oracle;
  return j;
}

Report report_from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.op = j.value("op", std::string());
  r.status = status_from_name(j.at("status").get<std::string>());
  r.values = j.at("values");
  r.certificates = j.at("certificates");
  r.provenance = j.at("provenance");
  r.notes = j.at("notes").get<std::vector<std::string>>();
  for (const auto& d : j.at("diagnostics"))
    r.diagnostics.push_back({d.at("path").get<std::string>(), d.at("message").get<std::string>()});
  if (j.contains("oracle")) r.oracle = j.at("oracle");
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  if (!r.op.empty()) os << ' ' << r.op;
  os << ": " << status_name(r.status) << '\n';
  for (const auto& [k, v] : r.values.items()) {
    os << "  " << k << ": ";
    print_value(os, v);
    os << '\n';
  }
  for (const auto& [k, v] : r.provenance.items()) os << "  [" << k << "] " << v.get<std::string>() << '\n';
  for (const auto& c : r.certificates) os << "  certificate: " << c.dump() << '\n';
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  for (const auto& d : r.diagnostics) os << "  " << d.path << ": " << d.message << '\n';
  if (!r.oracle.is_null()) os << "  oracle: " << r.oracle.dump() << '\n';
  return os.str();
}

}  // namespace singindex::cli
