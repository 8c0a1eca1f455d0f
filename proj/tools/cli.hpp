#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mskkt::cli {

/// Runs one CLI invocation (argv without the program name). JSON reports go to
/// `out`, diagnostics to `err`. Exit codes: 0 success, 1 internal error,
/// 2 user-input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace mskkt::cli
