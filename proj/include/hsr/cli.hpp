#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsr {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_validation = 2,
    exit_resource = 3,
    exit_invariant = 4,
};

/// Entry point behind the `hsr` binary. `args` excludes the program name.
/// Writes exactly one JSON document to `out` (a report, or an error document
/// on failure) and diagnostics to `err`.
int run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

} // namespace hsr
