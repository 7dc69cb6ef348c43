#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superlag/parser.hpp"
#include "superlag/report.hpp"

namespace superlag {

struct RunOptions {
  /// Override the file's `option oracle` / `option seed` when set.
  std::optional<unsigned> oracle_trials;
  std::optional<std::uint64_t> seed;
  /// Extra constraints over T*M and functions over TM to test for projectability.
  std::vector<std::string> constraints;
  std::vector<std::string> projections;
};

/// Runs the whole analysis. Errors are caught and reported in the report
/// (status "error"), prefixed with the stage that raised them.
AnalysisReport run(const ProblemFile& file, const RunOptions& options, const std::string& source = "");

/// Reads, parses and runs one file; parse errors become error reports.
AnalysisReport run_file(const std::string& path, const RunOptions& options);

/// 1 if any report has an error, else 2 if any verdict is undecided, else 0.
int exit_code(const std::vector<AnalysisReport>& reports);

}  // namespace superlag
