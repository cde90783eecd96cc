#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twoxor/sequences.hpp"

namespace twoxor {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void append(std::vector<CheckResult> more);
};

/// Names accepted by run_verify, in execution order.
const std::vector<std::string>& verify_suite_names();

/// Runs the named suites (all of them when `suites` is empty). Unknown
/// names throw std::invalid_argument.
VerifyReport run_verify(const std::vector<std::string>& suites);

/// Sequence identities checked against the given tables: golden values,
/// the two-sided f_r bound, the convolution square, the Wright recurrence
/// and positivity. Exposed so a corrupted table can be fed in directly.
std::vector<CheckResult> check_sequence_tables(const SequenceTable& eps, const SequenceTable& f,
                                               const SequenceTable& c);

/// One "RESULT suite=... check=... status=PASS|FAIL detail=..." line per
/// check, then a human-readable summary.
void print_report(std::ostream& out, const VerifyReport& report);

/// 0 when every check passed, 1 otherwise.
int exit_code(const VerifyReport& report);

}  // namespace twoxor
