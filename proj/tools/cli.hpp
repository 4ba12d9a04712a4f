#pragma once

#include <ostream>

namespace topvs::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 2,
  kInputError = 3,
  kInternalError = 4,
};

/// Runs one `topvs` invocation. Reports go to `out` unless redirected with
/// --out; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

const char* version_string();

}  // namespace topvs::cli
