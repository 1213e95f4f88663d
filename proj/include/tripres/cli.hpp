#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tripres {

// Dispatch one command-line invocation (args excludes the program name).
// Reports go to `out` as "key: value" lines, or one JSON object with --json;
// errors go to `err`.  Returns 0 when the requested check passed or the
// operation succeeded, 1 when a check came back negative, 2 on usage,
// parse, or I/O problems.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tripres
