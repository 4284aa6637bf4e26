#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betaseq::cli {

/// Exit codes.
inline constexpr int kOk = 0;
/// A verification failed, or an axiom expected to hold produced a counterexample.
inline constexpr int kVerificationFailed = 1;
/// Malformed command line or input (bad decimal, unreadable certificate, ...).
inline constexpr int kUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace betaseq::cli
