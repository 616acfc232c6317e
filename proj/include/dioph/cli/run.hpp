#pragma once

#include <string>
#include <vector>

#include "dioph/cli/config.hpp"

namespace dioph::cli {

/// Output of one run: a header object followed by zero or more rows. Rendered
/// as JSON lines, header first.
struct RunReport {
  json header;
  std::vector<json> rows;
  bool invariant_violation = false;
};

// Validates and dispatches. UsageError propagates; InvariantViolation is
// caught and recorded in the report.
RunReport run(const ExperimentConfig& config);

std::string render(const RunReport& report);

}  // namespace dioph::cli
