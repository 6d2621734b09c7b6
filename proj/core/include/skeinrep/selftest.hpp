#pragma once

// The acceptance suite: every check runs at its stated order with zero
// tolerance; identical seeds give byte-identical reports.

#include <cstdint>
#include <string>
#include <vector>

namespace skeinrep {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SelfTestReport {
  uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
  std::string json;  // canonical serialized report
};

SelfTestReport run_selftest(uint64_t seed);

}  // namespace skeinrep
