#include "singindex/cli/jobs.hpp"

#include "commands.hpp"
#include "singindex/error.hpp"

#include <algorithm>
#include <map>

namespace singindex::cli {

namespace {

const std::map<std::string, std::vector<std::string>>& op_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"smooth-index", {}},
      {"elk", {}},
      {"collection", {}},
      {"icis", {}},
      {"strat", {"mobius", "radial-from-eu", "eu-from-radial", "radial-from-phn", "phn-from-radial", "det-table",
                 "proportionality"}},
      {"burnside", {"classes", "marks", "mul", "restrict", "induce", "r0", "euler"}},
      {"equivariant", {"radial", "ph-check", "gsv-from-radial"}},
  };
  return table;
}

Action load(const std::string& command, const std::string& op, const Json& job, Loader& in,
            const RunOptions& options) {
  const auto& table = op_table();
  auto it = table.find(command);
  if (it == table.end()) {
    in.error("$", "unknown command '" + command + "'");
    return {};
  }
  if (!it->second.empty() && std::find(it->second.begin(), it->second.end(), op) == it->second.end()) {
    in.error("$", "unknown operation '" + op + "' for " + command);
    return {};
  }
  if (!job.is_object()) {
    in.error("$", "job must be a JSON object");
    return {};
  }
  if (command == "smooth-index" || command == "elk" || command == "collection")
    return load_smooth(command, job, in, options);
  if (command == "icis") return load_icis(job, in, options);
  if (command == "strat") return load_strat(op, job, in, options);
  if (command == "burnside") return load_burnside(op, job, in, options);
  return load_equivariant(op, job, in, options);
}

}  // namespace


Json matrix_json(const std::vector<std::vector<std::int64_t>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

bool command_takes_op(const std::string& command) {
  auto it = op_table().find(command);
  return it != op_table().end() && !it->second.empty();
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : op_table()) v.push_back(k);
    return v;
  }();
  return names;
}

const std::vector<std::string>& ops_of(const std::string& command) {
  static const std::vector<std::string> none;
  auto it = op_table().find(command);
  return it == op_table().end() ? none : it->second;
}

Diagnostics validate_job(const std::string& command, const std::string& op, const Json& job) {
  Diagnostics diags;
  Loader in(diags);
  load(command, op, job, in, RunOptions{});
  return diags;
}

Report run_job(const std::string& command, const std::string& op, const Json& job, const RunOptions& options) {
  Report report;
  report.command = command;
  report.op = op;
  Loader in(report.diagnostics);
  Action action;
  try {
    action = load(command, op, job, in, options);
  } catch (const Error& e) {
    in.error("$", e.what());
  }
  if (!in.ok() || !action) {
    report.status = Status::Rejected;
    return report;
  }
  try {
    action(report);
  } catch (const NotIsolated& e) {
    report.status = Status::Infinite;
    report.notes.emplace_back(e.what());
  } catch (const DegreeCapExceeded& e) {
    report.status = Status::DegreeCap;
    report.notes.emplace_back(e.what());
  } catch (const GenericityFailure& e) {
    report.status = Status::GenericityFailure;
    report.notes.emplace_back(e.what());
  } catch (const RejectedInput& e) {
    report.status = Status::Rejected;
    report.notes.emplace_back(e.what());
  } catch (const std::exception& e) {
    report.status = Status::Internal;
    report.notes.emplace_back(e.what());
  }
  return report;
}

}  // namespace singindex::cli
