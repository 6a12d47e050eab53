#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uniqmax::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kDomain = 3,
    kResource = 4,
};

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand. `args` excludes the program name. Output goes to
/// --output when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uniqmax::cli
