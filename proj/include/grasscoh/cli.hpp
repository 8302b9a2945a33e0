#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "grasscoh/serialize.hpp"

namespace grasscoh {

/// Exit statuses of run().
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitUndecided = 2, kExitFailure = 3 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct RegressCase {
  std::string name;
  /// Which worked example or statement the case reproduces.
  std::string anchor;
  bool pass = false;
  std::string detail;
};

/// Every worked example as a named case; deterministic.
std::vector<RegressCase> paper_regress();
Json to_json(const std::vector<RegressCase>& cases);

/// Coefficient of y1^4 y2 in phi(R_2) + 5 a01^3 for the general ansatz
/// (7,3) -> (7,2), after a11 = 3/2 a10 a01 and a10^2 = 4/5 (a20 + 2 a01).
/// The -6 x1 x2 x3 term of R_2 leaves a30 behind, so this is not a function
/// of a20, a01 alone: -3 a10 a01 a30 + a01 (a20^2 + 184 a20 a01 + 189 a01^2) / 25.
Polynomial seven_three_reduced_coefficient();

}  // namespace grasscoh
