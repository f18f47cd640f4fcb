#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace repalg::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;
  /// Diagnostics are reported but never decide the exit status.
  bool gating = true;
};

/// Acceptance criteria 1..13; each covers its own fixed (m, n, cap) ranges.
CheckResult dimension_formula(std::uint64_t seed);         // 1
CheckResult word_matrix_laws(std::uint64_t seed);          // 2
CheckResult jet_equivalence(std::uint64_t seed);           // 3
CheckResult s_sigma_identities(std::uint64_t seed);        // 4
CheckResult commutator_filtration(std::uint64_t seed);     // 5
CheckResult magnus_images(std::uint64_t seed);             // 6
CheckResult theta_values(std::uint64_t seed);              // 7
CheckResult crossed_law(std::uint64_t seed);               // 8
CheckResult f1_f2_tables(std::uint64_t seed);              // 9
CheckResult abelian_dimensions(std::uint64_t seed);        // 10
CheckResult abelian_theta(std::uint64_t seed);             // 11
CheckResult filtration_checks(std::uint64_t seed);         // 12
CheckResult tau1_values(std::uint64_t seed);               // 13

inline constexpr int kCriteria = 13;
/// Runs criterion i (1-based); throws std::out_of_range otherwise.
CheckResult criterion(int i, std::uint64_t seed);
std::string criterion_title(int i);

/// Spot checks at a single (m, n, cap).
std::vector<CheckResult> context_checks(int m, int n, int cap, std::uint64_t seed);
/// Non-gating comparisons against alternative conventions.
std::vector<CheckResult> diagnostics(std::uint64_t seed);

}  // namespace repalg::verify
