#include "dioph/cli/config.hpp"

#include <algorithm>
#include <map>

namespace dioph::cli {

namespace {

using JsonField = std::optional<json> ExperimentConfig::*;
using TextField = std::optional<std::string> ExperimentConfig::*;
using CountField = std::optional<std::uint64_t> ExperimentConfig::*;

const std::vector<std::pair<std::string, JsonField>> kJsonFields = {
    {"space", &ExperimentConfig::space}, {"point", &ExperimentConfig::point}, {"shift", &ExperimentConfig::shift}};

const std::vector<std::pair<std::string, TextField>> kTextFields = {
    {"psi", &ExperimentConfig::psi},         {"phi", &ExperimentConfig::phi},
    {"max_height", &ExperimentConfig::max_height}, {"window", &ExperimentConfig::window},
    {"q", &ExperimentConfig::q},             {"eps", &ExperimentConfig::eps},
    {"mode", &ExperimentConfig::mode},       {"choices", &ExperimentConfig::choices},
    {"x", &ExperimentConfig::x},             {"preset", &ExperimentConfig::preset},
    {"bands", &ExperimentConfig::bands},     {"output", &ExperimentConfig::output}};

const std::vector<std::pair<std::string, CountField>> kCountFields = {
    {"levels", &ExperimentConfig::levels},   {"n", &ExperimentConfig::n},
    {"trials", &ExperimentConfig::trials},   {"n_max", &ExperimentConfig::n_max},
    {"cap_bits", &ExperimentConfig::cap_bits}, {"d", &ExperimentConfig::d}};

const std::vector<std::string> kGlobalFields = {"seed", "output", "cap_bits"};

struct CommandSpec {
  std::vector<std::string> fields;
  std::vector<std::string> required;
};

const std::map<std::string, CommandSpec>& command_specs() {
  static const std::map<std::string, CommandSpec> specs = {
      {"space info", {{"space"}, {"space"}}},
      {"approx best", {{"space", "point", "max_height"}, {"space", "point", "max_height"}}},
      {"approx dirichlet", {{"point", "max_height", "d"}, {"point", "max_height", "d"}}},
      {"approx rounding", {{"space", "point", "q", "eps"}, {"space", "point", "q"}}},
      {"approx certify", {{"space", "point", "psi", "window", "bands"}, {"space", "point", "psi"}}},
      {"construct ba", {{"mode", "space", "psi", "levels"}, {"mode", "levels"}}},
      {"construct wa", {{"space", "psi", "levels", "choices"}, {"space", "psi", "levels"}}},
      {"claims", {{"mode", "space", "psi", "levels", "n", "trials", "shift"}, {"mode", "levels", "n"}}},
      {"transversality", {{"mode", "space", "psi", "levels", "trials", "shift"}, {"mode", "levels", "trials"}}},
      {"optimality counterexample", {{"n_max"}, {"n_max"}}},
      {"optimality psiq", {{"x", "n", "preset"}, {"x", "n"}}},
      {"optimality improve", {{"n", "psi"}, {"n"}}},
      {"optimality refute",
       {{"space", "point", "psi", "phi", "bands", "eps"}, {"space", "point", "psi", "phi", "bands"}}},
      {"growth compare", {{"psi", "phi"}, {"psi", "phi"}}},
      {"khinchin", {{"psi", "d"}, {"psi", "d"}}},
  };
  return specs;
}

const CommandSpec& spec_for(const std::string& command) {
  auto it = command_specs().find(command);
  if (it == command_specs().end()) throw UsageError("unknown command '" + command + "'");
  return it->second;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, spec] : command_specs()) out.push_back(name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& command_fields(const std::string& command) { return spec_for(command).fields; }

std::vector<std::string> present_fields(const ExperimentConfig& config) {
  std::vector<std::string> out;
  for (const auto& [name, member] : kJsonFields) {
    if (config.*member) out.push_back(name);
  }
  for (const auto& [name, member] : kTextFields) {
    if (config.*member) out.push_back(name);
  }
  for (const auto& [name, member] : kCountFields) {
    if (config.*member) out.push_back(name);
  }
  return out;
}

void validate(const ExperimentConfig& config) {
  const CommandSpec& spec = spec_for(config.command);
  for (const std::string& field : present_fields(config)) {
    if (!contains(spec.fields, field) && !contains(kGlobalFields, field)) {
      throw UsageError("'" + config.command + "' does not take '" + field + "'");
    }
  }
  std::vector<std::string> present = present_fields(config);
  for (const std::string& field : spec.required) {
    if (!contains(present, field)) throw UsageError("'" + config.command + "' needs '" + field + "'");
  }
  if (config.command == "approx certify" && config.window.has_value() == config.bands.has_value()) {
    throw UsageError("'approx certify' needs exactly one of 'window' and 'bands'");
  }
  if (config.mode && *config.mode != "noncobounded" && *config.mode != "cobounded") {
    throw UsageError("mode must be noncobounded or cobounded");
  }
  if (config.mode && *config.mode == "noncobounded" && !config.psi) {
    throw UsageError("noncobounded mode needs 'psi'");
  }
}

json to_json(const ExperimentConfig& config) {
  json j{{"command", config.command}};
  for (const auto& [name, member] : kJsonFields) {
    if (config.*member) j[name] = *(config.*member);
  }
  for (const auto& [name, member] : kTextFields) {
    if (config.*member) j[name] = *(config.*member);
  }
  for (const auto& [name, member] : kCountFields) {
    if (config.*member) j[name] = *(config.*member);
  }
  j["seed"] = config.seed;
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  ExperimentConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "command") {
      if (!value.is_string()) throw UsageError("command must be a string");
      c.command = value.get<std::string>();
      continue;
    }
    if (key == "seed") {
      if (!value.is_number_unsigned()) throw UsageError("seed must be a nonnegative integer");
      c.seed = value.get<std::uint64_t>();
      continue;
    }
    bool matched = false;
    for (const auto& [name, member] : kJsonFields) {
      if (name != key) continue;
      c.*member = value;
      matched = true;
    }
    for (const auto& [name, member] : kTextFields) {
      if (name != key) continue;
      if (!value.is_string()) throw UsageError("'" + key + "' must be a string");
      c.*member = value.get<std::string>();
      matched = true;
    }
    for (const auto& [name, member] : kCountFields) {
      if (name != key) continue;
      if (!value.is_number_unsigned()) throw UsageError("'" + key + "' must be a nonnegative integer");
      c.*member = value.get<std::uint64_t>();
      matched = true;
    }
    if (!matched) throw UsageError("unknown config field '" + key + "'");
  }
  if (c.command.empty()) throw UsageError("config has no command");
  validate(c);
  return c;
}

}  // namespace dioph::cli
