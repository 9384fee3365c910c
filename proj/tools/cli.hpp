#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epw::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand. `args` excludes the program name. JSON goes to `out`
/// (or to --out); diagnostics go to `err`. Returns 0, 1 on a math error and
/// 2 on a usage error.
int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace epw::cli
