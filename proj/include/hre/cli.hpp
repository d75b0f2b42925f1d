#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hre::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kArithmeticInfeasible = 2,
};

/// Runs one command line (args excludes the program name). JSON or CSV goes
/// to `out`; errors go to `err`, as does a short human-readable summary if
/// `human_summary` is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool human_summary = false);

}  // namespace hre::cli
