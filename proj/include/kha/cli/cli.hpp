#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace kha::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapExceeded = 3;

/// Seed used by randomized checks when --seed is not given.
inline constexpr unsigned long long kDefaultSeed = 20240601;

/// Runs one command line (without the program name). `in` backs "-" file
/// arguments.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kha::cli
