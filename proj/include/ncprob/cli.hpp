#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncprob::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kValidationError = 2;
inline constexpr int kPreconditionError = 3;

/// Runs one subcommand; `args` excludes the program name. Documents are read
/// from the --in files or from `in`, written to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ncprob::cli
