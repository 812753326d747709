#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace evanwave::verify {

struct Options {
  /// Test hook: run the interface unitarity criterion on the opposite
  /// square-root branch of the exit k_z.  The criterion must then fail,
  /// proving the check has teeth.
  bool flip_branch_cut = false;
};

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

/// Run the full verification suite: every cross-check the library's
/// guarantees rest on, each summarised in one pass/fail line.
[[nodiscard]] std::vector<CriterionResult> run_all(const Options& options = {});

[[nodiscard]] bool all_passed(const std::vector<CriterionResult>& results);

/// One line per criterion: PASS/FAIL, id, name, runtime, detail.
void print_report(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace evanwave::verify
