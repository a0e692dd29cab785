// Command-line front end. run_cli is the whole program minus main().
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "emlattice/rational.hpp"

namespace eml {

enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,
  kExitInvalid = 2,
  kExitBudget = 3,
  kExitInternal = 4,
};

struct VerifyReport {
  bool pass = true;
  /// One line per disagreeing coefficient.
  std::vector<std::string> diff;
};

/// Exact comparison of two (n, A_n) lists; a missing entry counts as zero.
VerifyReport compare_coefficients(const std::vector<std::pair<int, Rational>>& engine,
                                  const std::vector<std::pair<int, Rational>>& oracle);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eml
