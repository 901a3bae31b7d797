#pragma once

// Command-line front end: list and run registered checks, print moment
// sequences and Hankel determinants.

#include <iosfwd>
#include <string>
#include <vector>

#include "hankel_lab/identities.hpp"

namespace hankel_lab::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

/// Runs the command given by `args` (without the program name) against
/// `registry`. The report goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, const Registry& registry, std::ostream& out, std::ostream& err);

/// Names accepted by `seq` and `det`, besides the `from-t:<list>` form.
const std::vector<std::string>& sequence_names();

/// Flat JSON array with one object per outcome:
/// {"check", "n", "pass", "lhs", "rhs" (failures only), "millis"}.
std::string reports_to_json(const std::vector<CheckReport>& reports);

/// Inverse of reports_to_json; consecutive entries of one check form one report.
std::vector<CheckReport> reports_from_json(const std::string& text);

}  // namespace hankel_lab::cli
