#pragma once

#include <ostream>

namespace diamdom::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParse = 2,
  kPrecondition = 3,
  kResource = 4,
};

/// Entry point of the `diamdom` tool. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diamdom::cli
