#pragma once

#include "singindex/cli/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace singindex::cli {

struct RunOptions {
  std::uint64_t seed = 0;
  bool seed_given = false;  // --seed overrides the job's "seed"
  unsigned degree_cap = 40;
  bool oracle = false;
};

/// Commands that take an operation name before the job file.
bool command_takes_op(const std::string& command);
const std::vector<std::string>& commands();
const std::vector<std::string>& ops_of(const std::string& command);

/// Schema diagnostics; no computation.
Diagnostics validate_job(const std::string& command, const std::string& op, const Json& job);

/// Validates, then computes. Never throws for library errors: they become the
/// report status.
Report run_job(const std::string& command, const std::string& op, const Json& job, const RunOptions& options = {});

}  // namespace singindex::cli
