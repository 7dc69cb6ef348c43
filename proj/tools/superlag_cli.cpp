#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "superlag/driver.hpp"
#include "superlag/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Constraint analysis for Lagrangians on supermanifolds"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Analyze one or more problem files");
  std::vector<std::string> files;
  bool json = false;
  unsigned oracle = 0;
  std::uint64_t seed = 0;
  superlag::RunOptions options;
  analyze->add_option("files", files, "Problem files")->required()->check(CLI::ExistingFile);
  analyze->add_flag("--json", json, "Emit a JSON document instead of text");
  auto* oracle_opt = analyze->add_option("--oracle", oracle, "Re-check every identity in TRIALS random exterior algebras");
  auto* seed_opt = analyze->add_option("--seed", seed, "Seed for random checks");
  analyze->add_option("--constraint", options.constraints, "Extra constraint over T*M (repeatable)");
  analyze->add_option("--project", options.projections, "Test a TM function for FL-projectability (repeatable)");

  CLI11_PARSE(app, argc, argv);

  if (*oracle_opt) options.oracle_trials = oracle;
  if (*seed_opt) options.seed = seed;

  std::vector<superlag::AnalysisReport> reports;
  for (const auto& f : files) reports.push_back(superlag::run_file(f, options));

  if (json) {
    std::cout << superlag::to_json(reports);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) std::cout << "\n";
      std::cout << superlag::to_text(reports[i]);
    }
  }
  for (const auto& r : reports) {
    if (r.error) std::cerr << r.source << ": " << *r.error << "\n";
  }
  return superlag::exit_code(reports);
}
