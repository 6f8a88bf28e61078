#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carrymix::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

/// Environment variable consulted when --seed is absent.
inline constexpr const char* kSeedEnv = "CARRYMIX_SEED";

/// Runs one command line. `args` excludes the program name. Payload goes to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace carrymix::cli
