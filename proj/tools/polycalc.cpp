// SPDX-License-Identifier: Apache-2.0
//
// polycalc <command> [file.json] [--seed N] [--count M] [--dims D] [--rows R]
//                    [--coeff-bound C] [--kind K] [--json|--pretty]
//
// Reads the payload from file.json, or stdin when the file is omitted, and
// writes a single JSON report to stdout. Logs go to stderr.
// Exit codes: 0 success, 1 internal verification failure, 2 invalid input.

#include "polycalc/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const polycalc::Json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral convex-analysis toolkit"};
  std::string command, file;
  std::uint64_t seed = 1;
  long count = 0;
  long dims = 0, rows = 0, coeff_bound = 0;
  std::string kind = "polyhedron";
  bool pretty = false, compact = false;
  app.add_option("command", command,
                 "One of: ri-point separate normal-cone intersection-rule subdiff subdiff-sum "
                 "subdiff-chain coderivative coderiv-sum coderiv-chain conjugate support conj-sum "
                 "conj-chain infconv fenchel check-suite generate")
      ->required();
  app.add_option("file", file, "JSON payload file; stdin when omitted");
  app.add_option("--seed", seed, "Random seed for generate/check-suite");
  app.add_option("--count", count, "Instance count override for check-suite");
  app.add_option("--dims", dims, "Maximum dimension for generated instances");
  app.add_option("--rows", rows, "Maximum constraint rows for generated instances");
  app.add_option("--coeff-bound", coeff_bound, "Coefficient magnitude bound");
  app.add_option("--kind", kind, "Instance kind for generate");
  app.add_flag("--pretty", pretty, "Indented JSON output");
  app.add_flag("--json", compact, "Compact JSON output (default)");
  CLI11_PARSE(app, argc, argv);

  polycalc::GenProfile profile;
  profile.dims = dims > 0 ? static_cast<polycalc::Index>(dims) : 4;
  profile.rows = rows > 0 ? static_cast<polycalc::Index>(rows) : 6;
  profile.coeff_bound = coeff_bound > 0 ? coeff_bound : 5;

  try {
    if (command == "generate") {
      return emit(polycalc::generate_payload(kind, seed, profile), pretty);
    }
    if (command == "check-suite") {
      polycalc::SuiteConfig cfg;
      cfg.seed = seed;
      cfg.count_override = count;
      cfg.profile.dims = dims > 0 ? static_cast<polycalc::Index>(dims) : 6;
      cfg.profile.rows = rows > 0 ? static_cast<polycalc::Index>(rows) : 12;
      cfg.profile.coeff_bound = coeff_bound > 0 ? coeff_bound : 5;
      const auto results = polycalc::run_acceptance_suite(cfg, &std::cerr);
      polycalc::Json arr = polycalc::Json::array();
      bool all_pass = true;
      for (const auto& r : results) {
        arr.push_back(polycalc::Json{
            {"name", r.name}, {"pass", r.pass}, {"instances", r.checked}, {"detail", r.detail}});
        all_pass = all_pass && r.pass;
      }
      emit(polycalc::Json{{"command", "check-suite"}, {"criteria", arr}, {"all_pass", all_pass}}, pretty);
      return all_pass ? 0 : 1;
    }

    polycalc::Scenario scenario;
    scenario.command = command;
    std::string text;
    if (file.empty()) {
      text = read_all(std::cin);
    } else {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return 2;
      }
      text = read_all(in);
    }
    try {
      scenario.payload = polycalc::Json::parse(text);
    } catch (const polycalc::Json::exception& err) {
      emit(polycalc::Json{{"command", command},
                          {"status", "invalid-input"},
                          {"certificates", polycalc::Json{{"error", err.what()}}},
                          {"timing_ms", 0}},
           pretty);
      return 2;
    }
    const polycalc::Report report = polycalc::run_scenario(scenario);
    emit(report.to_json(command), pretty);
    return report.exit_code();
  } catch (const std::logic_error& err) {
    std::cerr << "internal verification failure: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
