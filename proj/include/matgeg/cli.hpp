#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matgeg {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. The text report goes to out; usage and input errors
// go to err. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matgeg
