#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtomo {

struct CheckItem {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

/// Runs the full invariant battery: scalar q-arithmetic, operator identities,
/// polynomial recurrence/parity/limits, spectral-measure exactness and
/// completeness, tomogram normalization and symmetries, classical-limit
/// agreement, and the dense brute-force cross-check. q and truncation
/// parameterize the residual checks where meaningful; items with fixed
/// parameters state them in their names.
CheckReport run_self_check(double q, int truncation);

/// One aligned pass/fail line per item plus a summary line.
void print_report(const CheckReport& report, std::ostream& os);

}  // namespace qtomo
