#pragma once

#include "loader.hpp"
#include "singindex/cli/jobs.hpp"

#include <functional>

namespace singindex::cli {

/// Deferred computation produced by a loader once the job is schema-valid.
using Action = std::function<void(Report&)>;

Action load_smooth(const std::string& command, const Json& job, Loader& in, const RunOptions& options);
Action load_icis(const Json& job, Loader& in, const RunOptions& options);
Action load_strat(const std::string& op, const Json& job, Loader& in, const RunOptions& options);
Action load_burnside(const std::string& op, const Json& job, Loader& in, const RunOptions& options);
Action load_equivariant(const std::string& op, const Json& job, Loader& in, const RunOptions& options);

Json matrix_json(const std::vector<std::vector<std::int64_t>>& m);

}  // namespace singindex::cli
