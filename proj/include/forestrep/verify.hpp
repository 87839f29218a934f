#pragma once

#include <string>
#include <vector>

namespace forestrep {

struct VerifyOptions {
  /// Every range in the suite is truncated at max_n; 10 runs all of them in full.
  int max_n = 10;
  unsigned seed = 20240601;
  int threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  /// Observations that are reported rather than asserted (tabulation errata,
  /// the image-size census, the hook-length witness).
  std::vector<std::string> notices;

  bool all_passed() const;
  std::string text() const;
  std::string json() const;
};

VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace forestrep
