#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyarith {

/// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs the polyarith command line. args excludes the program name. Results go
/// to out as JSON (or CSV for catalog exports); domain errors are written to
/// err as {"error": <name>, "message": ...}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyarith
