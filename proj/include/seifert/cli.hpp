#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seifert {

// Exit codes: 0 success, 1 a reported assertion failed, 2 invalid input
// (validation, domain or resource errors, bad flags).
enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInvalid = 2 };

// Runs one command line (without the program name). The report goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seifert
