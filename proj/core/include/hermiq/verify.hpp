#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hermiq/codes.hpp"
#include "hermiq/quantum.hpp"
#include "hermiq/serialize.hpp"

namespace hermiq {

struct SuiteReport {
  std::string suite;
  bool pass = true;
  int checks = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::vector<std::string> verify_suite_names();

/// Runs one of the named invariant suites (field, geometry, dimensions,
/// duality, self-orth, distances-q2, tables) over the given q values.
SuiteReport run_verify_suite(const std::string& suite, const std::vector<int>& qs,
                             std::uint64_t budget = kDefaultBudget);

/// Re-derives a Steane record from its two classical codes: rank identities
/// and preconditions always, exhaustive distance confirmation when the
/// search fits the budget. Returns the evidence level attained.
VerificationLevel verify_steane_record(const QuantumCodeRecord& rec, const LinearCode& code,
                                       const LinearCode& larger, std::uint64_t budget = kDefaultBudget);

/// Same for a CSS pair record (pass the inner code as c2).
VerificationLevel verify_css_record(const QuantumCodeRecord& rec, const LinearCode& c1, const LinearCode& c2,
                                    std::uint64_t budget = kDefaultBudget);

}  // namespace hermiq
