#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gemkit {

enum ExitCode : int { kExitOk = 0, kExitRefused = 1, kExitMalformed = 2, kExitInconsistent = 3 };

// Runs the gemkit command line. Reports go to `out`, JSON diagnostics to
// `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gemkit
