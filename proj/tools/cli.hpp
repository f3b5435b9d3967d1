#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordbraid::cli {

enum ExitCode : int { kOk = 0, kBadArguments = 1, kComputationError = 2 };

// Runs one ordbraid command. args excludes the program name. JSON documents go
// to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ordbraid::cli
