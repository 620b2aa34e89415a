// SPDX-License-Identifier: Apache-2.0
//
// JSON scenario dispatch: one command name plus a payload object in, one
// Report out. This is the in-process core of the command-line tool.

#pragma once

#include "polycalc/checks.hpp"
#include "polycalc/io.hpp"

namespace polycalc {

struct Scenario {
  std::string command;
  Json payload;
};

enum class ReportStatus { Ok, QualificationFailed, Infeasible, InvalidInput };

std::string to_string(ReportStatus s);

struct Report {
  ReportStatus status = ReportStatus::Ok;
  Json certificates;
  long timing_ms = 0;

  /// 0 ok, 1 internal verification failure (thrown, not reported), 2 invalid input.
  int exit_code() const { return status == ReportStatus::InvalidInput ? 2 : 0; }
  Json to_json(const std::string& command) const;
};

/// Dispatches to the module operation named by the scenario. Input problems
/// (schema violations, malformed rationals, dimension mismatches) come back
/// as InvalidInput reports; violated qualifications and empty sets come back
/// as their own statuses; std::logic_error (an internal verification
/// failure) is left to the caller.
Report run_scenario(const Scenario& s);

/// Payload generator for the given kind; deterministic in the seed.
/// Kinds: lp, polyhedron, polyhedron-pair, polyhedron-pair-with-common-point,
/// function, function-pair-qualified, qualified-fenchel, chain, map,
/// map-pair-sum, map-pair-chain.
Json generate_payload(const std::string& kind, std::uint64_t seed, const GenProfile& profile);

}  // namespace polycalc
