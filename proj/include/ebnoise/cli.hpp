#pragma once

#include <iosfwd>
#include <string>

namespace ebnoise {

enum ExitCode : int { kExitOk = 0, kExitVerifyFail = 1, kExitParse = 2, kExitInvariant = 3, kExitIo = 4 };

/// Entry point behind the ebnoise executable; streams are injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Inline JSON (leading '{'), "-" for standard input, otherwise a file path.
std::string read_channel_argument(const std::string& arg);

}  // namespace ebnoise
