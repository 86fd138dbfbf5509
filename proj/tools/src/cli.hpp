#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sponge::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kResource = 2,      // BudgetExceeded, DepthTooShallow, ArithmeticOverflow
  kCertificate = 3,
};

/// Runs one command line (without the program name). Primary output goes to
/// `out`, diagnostics to `err`; report files go under --out when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sponge::cli
