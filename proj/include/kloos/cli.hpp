// Copyright 2026 The kloos Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef KLOOS_CLI_HPP
#define KLOOS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kloos::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `kloos` command line. `args` excludes the program name.
/// Returns 0 when every selected check passes, 1 on a verification
/// failure and 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kloos::cli

#endif  // KLOOS_CLI_HPP
