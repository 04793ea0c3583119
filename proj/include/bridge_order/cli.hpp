#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bridge_order::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2, kBudgetExhausted = 3 };

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bridge_order::cli
