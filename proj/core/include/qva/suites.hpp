#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qva/rational.hpp"

namespace qva {

struct CheckResult {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  bool passed = false;
  /// First failing coefficient or other evidence; empty on success.
  std::string witness;
};

/// Parameters shared by the verification suites. Unset h_order means each
/// suite uses its own default (g: 30, rmatrix: 20, ideal: 2, slocality: 6).
struct SuiteConfig {
  std::optional<std::size_t> h_order;
  int degree = 8;
  int level = 1;
  Rat t = 1;
  int pmax = 3;
  std::uint64_t seed = 0;
};

/// g, rmatrix, basis, ideal, relations, slocality.
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown name.
std::vector<CheckResult> run_suite(const std::string &name, const SuiteConfig &config);

} // namespace qva
