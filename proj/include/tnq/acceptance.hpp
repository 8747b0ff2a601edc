#pragma once

#include <string>
#include <vector>

#include "tnq/counting.hpp"

namespace tnq {
namespace accept {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  int threads = 1;
  unsigned long long budget = 1ull << 26;
  std::string level = "desk";
  count::Cache* cache = nullptr;
};

/// Runs the full verification catalog. Every criterion is an exact integer or
/// rational assertion; none defers a tolerance to runtime configuration.
std::vector<CriterionResult> run(const Options& opts);

}  // namespace accept
}  // namespace tnq
