#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mincan::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { ok = 0, domain_error = 1, budget_exhausted = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mincan::cli
