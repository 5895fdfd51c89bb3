// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
//
// All comparisons are exact (rational arithmetic, integer dimensions), so the
// only pinned tolerance is zero: a criterion passes only when every instance
// matches exactly.

#include "nilalg/algebra.hpp"
#include "nilalg/catalog.hpp"
#include "nilalg/verification.hpp"

#include <array>
#include <chrono>
#include <iostream>

using namespace nilalg;

namespace {

constexpr int kMismatchTolerance = 0;

constexpr int kNMax = 10;
constexpr int kTrials = 100;
constexpr std::uint64_t kSeedA = 20240601;
constexpr std::uint64_t kSeedB = 977;

// (left, right, two-sided, commutator) of the four 6-dimensional filiform
// tables, frozen from the independent oracle.
const std::array<AnnihilatorInvariants, 4> kFiliform6 = {{
    {2, 2, 2, 0},
    {1, 1, 1, 0},
    {2, 2, 1, 1},
    {1, 1, 1, 1},
}};

void check_frozen_invariants(CriterionResult& result) {
  for (int v = 1; v <= 4; ++v) {
    const AnnihilatorInvariants got = annihilator_invariants(filiform_variant(6, v));
    const AnnihilatorInvariants& want = kFiliform6[static_cast<std::size_t>(v - 1)];
    if (got != want) {
      result.failures.push_back("variant " + std::to_string(v) + " invariants differ from the frozen fixture");
    }
  }
  if (static_cast<int>(result.failures.size()) > kMismatchTolerance) result.passed = false;
}

}  // namespace

int main() {
  VerifyOptions options;
  options.n_max = kNMax;
  options.trials = kTrials;
  options.seed_a = kSeedA;
  options.seed_b = kSeedB;

  bool all = true;
  for (int id = 1; id <= 9; ++id) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result = verify_criterion(id, options);
    if (id == 8) check_frozen_invariants(result);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << result.line() << "  [" << ms << " ms]\n";
    all = all && result.passed;
  }
  std::cout << (all ? "all criteria pass\n" : "some criteria fail\n");
  return all ? 0 : 1;
}
