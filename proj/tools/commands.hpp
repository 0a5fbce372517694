// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dki::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2, kIo = 3 };

/// Runs the dki tool with args (excluding the program name). Table output
/// goes to out unless --out names a file; diagnostics go to err.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dki::cli
