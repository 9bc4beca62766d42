#include "singindex/cli/app.hpp"

#include "singindex/cli/jobs.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace singindex::cli {

namespace {

struct Outcome {
  Report report;
  std::string file;
};

Outcome process(const std::string& command, const std::string& op, const std::string& file, bool validate_only,
                const RunOptions& options) {
  Outcome o;
  o.file = file;
  o.report.command = validate_only ? "validate" : command;
  o.report.op = validate_only ? (op.empty() ? command : command + " " + op) : op;
  std::ifstream in(file);
  if (!in) {
    o.report.status = Status::Rejected;
    o.report.diagnostics.push_back({"$", "cannot open job file '" + file + "'"});
    return o;
  }
  Json job;
  try {
    job = Json::parse(in);
  } catch (const Json::parse_error& e) {
    o.report.status = Status::Rejected;
    o.report.diagnostics.push_back({"$", std::string("JSON parse error: ") + e.what()});
    return o;
  }
  if (validate_only) {
    o.report.diagnostics = validate_job(command, op, job);
    o.report.values["valid"] = o.report.diagnostics.empty();
    o.report.status = o.report.diagnostics.empty() ? Status::Ok : Status::Rejected;
    return o;
  }
  o.report = run_job(command, op, job, options);
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"singindex: exact indices of vector fields and 1-forms"};
  app.set_help_flag("-h,--help", "Show help");
  std::vector<std::string> positional;
  RunOptions options;
  std::string format = "json";
  unsigned jobs = 1;
  app.add_option("args", positional, "<command> [op] <jobfile...>  or  validate <command> [op] <jobfile...>")
      ->required();
  auto* seed = app.add_option("--seed", options.seed, "Seed for generic linear sections (default 0)");
  app.add_option("--degree-cap", options.degree_cap, "Degree cap for basis computations")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--oracle", options.oracle, "Cross-check against the independent oracles");
  app.add_option("--jobs", jobs, "Parallel workers for several job files")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"singindex"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  options.seed_given = seed->count() > 0;

  bool validate_only = false;
  std::size_t pos = 0;
  if (positional[pos] == "validate") {
    validate_only = true;
    ++pos;
  }
  if (pos >= positional.size()) {
    err << "missing command\n";
    return 2;
  }
  const std::string command = positional[pos++];
  const auto& known = commands();
  if (std::find(known.begin(), known.end(), command) == known.end()) {
    err << "unknown command '" << command << "'; expected one of:";
    for (const auto& c : known) err << ' ' << c;
    err << '\n';
    return 2;
  }
  std::string op;
  if (command_takes_op(command)) {
    if (pos >= positional.size()) {
      err << command << " needs an operation:";
      for (const auto& o : ops_of(command)) err << ' ' << o;
      err << '\n';
      return 2;
    }
    op = positional[pos++];
    const auto& ops = ops_of(command);
    if (std::find(ops.begin(), ops.end(), op) == ops.end()) {
      err << "unknown operation '" << op << "' for " << command << '\n';
      return 2;
    }
  }
  std::vector<std::string> files(positional.begin() + static_cast<std::ptrdiff_t>(pos), positional.end());
  if (files.empty()) {
    err << "missing job file\n";
    return 2;
  }

  std::vector<Outcome> results(files.size());
  const std::size_t workers = std::min<std::size_t>(jobs, files.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) results[i] = process(command, op, files[i], validate_only, options);
  } else {
    std::vector<std::future<void>> pool;
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w)
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < files.size(); i = next++)
          results[i] = process(command, op, files[i], validate_only, options);
      }));
    for (auto& f : pool) f.get();
  }

  int code = 0;
  for (const auto& r : results) code = std::max(code, exit_code(r.report.status));
  if (format == "json") {
    if (results.size() == 1) {
      out << to_json(results.front().report).dump(2) << '\n';
    } else {
      Json all = Json::array();
      for (const auto& r : results) {
        Json j = to_json(r.report);
        j["file"] = r.file;
        all.push_back(j);
      }
      out << all.dump(2) << '\n';
    }
  } else {
    for (const auto& r : results) {
      if (results.size() > 1) out << "== " << r.file << '\n';
      out << to_text(r.report);
    }
  }
  return code;
}

}  // namespace singindex::cli
