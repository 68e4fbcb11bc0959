#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabkit/json_io.hpp"
#include "stabkit/region.hpp"

namespace stabkit {

// One falsified case: everything needed to replay it.
struct CaseFailure {
  unsigned long case_index = 0;
  std::uint64_t case_seed = 0;
  std::string what;
  Json inputs;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  unsigned long budget = 0;
  unsigned long cases_run = 0;
  unsigned long indeterminates = 0;
  std::vector<CaseFailure> failures;
  double wall_ms = 0;  // excluded from determinism comparisons

  Json to_json() const;
  // Serialization with the timing field zeroed, for byte-comparisons.
  Json to_json_stable() const;
};

struct SuiteParams {
  std::uint64_t seed = 1;
  unsigned long cases = 0;  // 0 = suite default
  unsigned long budget = 2000;
  unsigned precision_bits = 64;
  std::optional<unsigned long> only_case;  // replay path
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

// Re-runs the case behind a failure record; returns the regenerated failure
// when it reproduces, nullopt when the case now passes.
std::optional<CaseFailure> replay_case(const std::string& suite, const SuiteParams& params,
                                       unsigned long case_index);

struct GraceSearchResult {
  bool found = false;
  unsigned long tried = 0;
  Json details;
};

// Randomized search for stable pairs with vanishing apolarity form over a
// region pair (intended for NotCovered pairs); stability of candidates is
// screened by the sampling falsifier, which the report records.
GraceSearchResult search_grace_counterexample(const RegionProduct& A,
                                              const RegionProduct& B,
                                              unsigned long budget, std::uint64_t seed);

}  // namespace stabkit
