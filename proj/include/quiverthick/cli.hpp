#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quiverthick::cli {

enum ExitCode : int {
  kPositive = 0,        ///< realizable / isomorphic / all checks passed
  kNegative = 1,        ///< mathematically negative answer
  kInputError = 2,      ///< malformed input or violated precondition
  kFieldExtension = 3,  ///< an endomorphism algebra does not split over the working field
};

/// Runs one command. `args` excludes the program name. The result envelope
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverthick::cli
