#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hallpi::cli {

enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2, kIndeterminate = 3 };

/// Runs one invocation.  `args` excludes the program name.  Never throws;
/// every error is reported on `err` and mapped to an exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default cache directory: $HALLPI_CACHE_DIR, else $XDG_CACHE_HOME/hallpi,
/// else ~/.cache/hallpi.
std::string default_cache_dir();

}  // namespace hallpi::cli
