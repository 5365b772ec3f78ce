#pragma once

#include <iosfwd>

namespace pseudoanalytic::cli {

enum ExitCode : int { ok = 0, verification_failure = 1, usage_error = 2, numerical_error = 3 };

/// Entry point of the command-line front end.  Data goes to `out` (or the
/// --out file), diagnostics and summaries to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pseudoanalytic::cli
