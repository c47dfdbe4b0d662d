#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tasep::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { ok = 0, invalid_input = 1, internal_mismatch = 2 };

/// Runs one invocation; args excludes the program name. Artifacts go to
/// `out` (or to --output), error records to `out` as JSON, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads a key=value config file ('#' starts a comment) and appends
/// `--key value` for every key not already given on the command line.
std::vector<std::string> merge_config(const std::vector<std::string>& args);

}  // namespace tasep::cli
