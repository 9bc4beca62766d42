#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace singindex::cli {

/// Full command-line entry point. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace singindex::cli
