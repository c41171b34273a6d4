#pragma once

#include <ostream>

namespace lgr::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

// Entry point of the lgr tool. Writes results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lgr::cli
