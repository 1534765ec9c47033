#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace puiseux::cli {

/// Exit codes of run().
enum Exit : int { kOk = 0, kInputError = 1, kDomainError = 2, kUnknown = 3 };

/// Runs one query. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace puiseux::cli
