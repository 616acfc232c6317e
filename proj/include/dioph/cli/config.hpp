#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/cli/json_io.hpp"

namespace dioph::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Everything a single CLI invocation depends on. Echoed into every report
/// so the run can be repeated with `replay`.
struct ExperimentConfig {
  std::string command;  // e.g. "approx best"

  std::optional<json> space;
  std::optional<json> point;
  std::optional<json> shift;

  std::optional<std::string> psi;
  std::optional<std::string> phi;
  std::optional<std::string> max_height;
  std::optional<std::string> window;
  std::optional<std::string> q;
  std::optional<std::string> eps;
  std::optional<std::string> mode;
  std::optional<std::string> choices;
  std::optional<std::string> x;
  std::optional<std::string> preset;
  std::optional<std::string> bands;
  std::optional<std::string> output;

  std::optional<std::uint64_t> levels;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> trials;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> cap_bits;
  std::optional<std::uint64_t> d;

  std::uint64_t seed = 0;
};

const std::vector<std::string>& known_commands();
// Fields a command accepts besides the global ones (seed, output, cap_bits).
const std::vector<std::string>& command_fields(const std::string& command);

// Names of the fields that are set, in a fixed order.
std::vector<std::string> present_fields(const ExperimentConfig& config);

// Unknown command, fields the command does not take, missing required
// fields: all raise UsageError.
void validate(const ExperimentConfig& config);

json to_json(const ExperimentConfig& config);
// Rejects unknown keys and wrongly typed values.
ExperimentConfig config_from_json(const json& j);

}  // namespace dioph::cli
