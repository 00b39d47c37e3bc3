#pragma once

#include <iosfwd>

namespace modkit::cli {

/// Exit codes: 0 pass, 1 verification failed, 2 parse error, 3 domain error, 4 usage error.
enum ExitCode : int { kPass = 0, kFail = 1, kParseError = 2, kDomainError = 3, kUsageError = 4 };

/// Entry point of the modkit tool; reads MODKIT_TOL from the environment.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace modkit::cli
