#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evencl {

struct CriterionResult {
  int id = 0;
  std::string suite;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Suite names in criterion order (criterion i is suites()[i - 1]).
const std::vector<std::string>& acceptance_suites();

/// Runs one suite. Unknown names throw std::invalid_argument.
CriterionResult run_acceptance(const std::string& suite, std::uint64_t seed = 0);

/// Runs the named suites with up to `jobs` worker threads; results come back
/// in the order requested.
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& suites, std::uint64_t seed, unsigned jobs);

}  // namespace evencl
