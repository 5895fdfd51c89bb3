#ifndef NILALG_VERIFICATION_HPP
#define NILALG_VERIFICATION_HPP

#include "nilalg/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilalg {

// Property suites over the catalog. Each suite checks one classification
// statement on every instance up to n_max and reports the first failures.

struct VerifyOptions {
  int n_max = 10;
  int trials = 100;
  std::uint64_t seed_a = 20240601;
  std::uint64_t seed_b = 977;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  int cases = 0;                      // instances examined
  std::vector<std::string> failures;  // at most a handful, human readable

  /// "PASS  3 characteristic sequences (124 cases)" plus failure lines.
  std::string line() const;
};

/// Null-filiform, filiform, quasi-filiform (alpha in {0, 1, -1, 1/2}) and
/// main-family (b empty, n <= 9) instances, capped at n_max.
std::vector<FamilySpec> catalog_instances(int n_max);
std::vector<FamilySpec> main_family_instances(int n_max);

/// Specs with nonempty b-systems used by the constraint suite.
std::vector<FamilySpec> constraint_instances();

CriterionResult verify_criterion(int id, const VerifyOptions& options);
/// Criteria 1..9 in order.
std::vector<CriterionResult> verify_theorems(const VerifyOptions& options);

}  // namespace nilalg

#endif  // NILALG_VERIFICATION_HPP
