#pragma once

#include <ostream>

namespace bbwtilt::cli {

/// Exit codes: 0 when every requested claim passes, 1 on any FAIL,
/// 2 on parse or configuration errors and inconclusive certificates.
enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

/// Entry point behind the `bbwtilt` executable. The registry comes from
/// --registry when given, else BBWTILT_REGISTRY, else the built-in path.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bbwtilt::cli
