#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcg::verify {

struct Options {
  int genus_lo = 2;
  int genus_hi = 5;
  int samples = 200;
  std::uint64_t seed = 1;
  int max_word_length = 50;
  /// Maximum number of factors in each random element of N.
  int element_budget = 6;
};

struct PropertyResult {
  std::string suite;
  std::string name;
  int genus;
  int checked = 0;
  bool passed = true;
  /// First failing input, human readable.
  std::string counterexample;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite ("words", "d-function", "cocycle-n", "descent", "earle",
/// "paper-vectors") or "all". Throws std::invalid_argument for unknown names.
std::vector<PropertyResult> run_suite(const std::string& suite, const Options& opts);

}  // namespace mcg::verify
