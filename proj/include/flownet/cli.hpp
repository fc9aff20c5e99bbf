#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flownet::cli {

// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitPrecondition = 4;

// Runs one command line (without the program name). Results go to `out`,
// messages to `err`; `in` is read when no input file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace flownet::cli
