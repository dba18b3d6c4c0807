#pragma once

#include <ostream>

namespace sst {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Entry point of the sstgroups tool; writes reports to `out` and
/// diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sst
