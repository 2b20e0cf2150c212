// cli.hpp
// Entry point of the primeclass command-line tool.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or argument error.

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace primeclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace primeclass::cli
