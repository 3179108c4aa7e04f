#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace bicx::cli {

/// Named tolerances accepted by `--tol name=value`.
std::map<std::string, double> default_tolerances();

/// Runs one command line (without the program name).  Exit codes: 0 on
/// success, 1 on domain errors, 2 on parse errors.  Error payloads are JSON
/// objects {"error", "message", "fields"} written to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace bicx::cli
