#pragma once
// Command-line front end.  Kept as a library so tests can drive it without
// spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

namespace quadmaps::cli {

inline constexpr const char* kSchemaId = "quadmaps.report/1";

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

// args excludes the program name.  Reports go to `out` unless --out is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadmaps::cli
