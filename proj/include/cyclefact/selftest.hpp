#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclefact {

struct SelfTestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelfTestOptions {
  /// Largest <alpha> covered by the exhaustive checks.
  int max_weight = 4;
  /// Largest n handed to the brute-force oracle.
  int oracle_cap = 7;
  /// Largest n of the Catalan check.
  int catalan_max = 8;
};

/// Cross-checks every counting route and bijection at the given scale,
/// printing one line per check to `log`.
std::vector<SelfTestCheck> run_selftest(const SelfTestOptions& options, std::ostream& log);

}  // namespace cyclefact
