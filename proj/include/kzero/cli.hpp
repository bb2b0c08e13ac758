#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kzero::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_precondition = 3;

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Returns 0, 2 (unreadable input) or 3 (violated precondition).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kzero::cli
