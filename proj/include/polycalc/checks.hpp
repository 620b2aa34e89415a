// SPDX-License-Identifier: Apache-2.0
//
// Property-check batteries over seeded random instances. The acceptance
// binary runs them at their default sizes; the CLI check-suite command runs
// them with user-selected counts and seeds.

#pragma once

#include "polycalc/generator.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace polycalc {

struct SuiteConfig {
  std::uint64_t seed = 1;
  long count_override = 0;  // 0 keeps each battery's default size
  GenProfile profile{6, 12, 5};
};

struct CriterionResult {
  std::string name;
  bool pass = false;
  long checked = 0;
  std::string detail;
};

CriterionResult check_lp_certificate_closure(const SuiteConfig& cfg);
CriterionResult check_separation_iff(const SuiteConfig& cfg);
CriterionResult check_normal_cone_intersection(const SuiteConfig& cfg);
CriterionResult check_conjugate_identities(const SuiteConfig& cfg);
CriterionResult check_conjugate_sum_rule(const SuiteConfig& cfg);
CriterionResult check_strong_duality(const SuiteConfig& cfg);
CriterionResult check_subdifferential_calculus(const SuiteConfig& cfg);
CriterionResult check_coderivative_calculus(const SuiteConfig& cfg);
CriterionResult check_projection_oracle(const SuiteConfig& cfg);

/// Runs all batteries in order, printing one pass/fail line each to `log`
/// when provided.
std::vector<CriterionResult> run_acceptance_suite(const SuiteConfig& cfg, std::ostream* log);

}  // namespace polycalc
