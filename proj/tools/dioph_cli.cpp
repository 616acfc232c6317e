#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>

#include "dioph/cli/run.hpp"

namespace {

using dioph::UsageError;
using dioph::cli::ExperimentConfig;
using dioph::cli::json;

const std::vector<std::string> kJsonOptions = {"space", "point", "shift"};
const std::vector<std::string> kCountOptions = {"levels", "n", "trials", "n_max", "cap_bits", "d"};

std::string flag_name(std::string field) {
  for (char& ch : field) {
    if (ch == '_') ch = '-';
  }
  return "--" + field;
}

bool is_one_of(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

struct Leaf {
  std::string command;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
};

std::uint64_t parse_count(const std::string& field, const std::string& text) {
  dioph::Integer v = dioph::parse_integer(text);
  if (v < 0) throw UsageError("--" + field + " must be nonnegative");
  return dioph::to_u64(v);
}

ExperimentConfig config_from_leaf(const Leaf& leaf) {
  ExperimentConfig c;
  c.command = leaf.command;
  for (const auto& [field, text] : leaf.values) {
    if (field == "seed") {
      c.seed = parse_count(field, text);
    } else if (is_one_of(kJsonOptions, field)) {
      json j = dioph::cli::load_json_argument(text);
      if (field == "space") c.space = j;
      if (field == "point") c.point = j;
      if (field == "shift") c.shift = j;
    } else if (is_one_of(kCountOptions, field)) {
      std::uint64_t v = parse_count(field, text);
      if (field == "levels") c.levels = v;
      if (field == "n") c.n = v;
      if (field == "trials") c.trials = v;
      if (field == "n_max") c.n_max = v;
      if (field == "cap_bits") c.cap_bits = v;
      if (field == "d") c.d = v;
    } else {
      std::optional<std::string>* slot = nullptr;
      if (field == "psi") slot = &c.psi;
      if (field == "phi") slot = &c.phi;
      if (field == "max_height") slot = &c.max_height;
      if (field == "window") slot = &c.window;
      if (field == "q") slot = &c.q;
      if (field == "eps") slot = &c.eps;
      if (field == "mode") slot = &c.mode;
      if (field == "choices") slot = &c.choices;
      if (field == "x") slot = &c.x;
      if (field == "preset") slot = &c.preset;
      if (field == "bands") slot = &c.bands;
      if (field == "output") slot = &c.output;
      if (slot == nullptr) throw UsageError("unhandled option " + field);
      *slot = text;
    }
  }
  return c;
}

ExperimentConfig config_from_replay(const std::string& text) {
  json j = dioph::cli::load_json_argument(text);
  // A whole report header is accepted as well as a bare config.
  if (j.is_object() && j.contains("config") && j.contains("version")) j = j.at("config");
  return dioph::cli::config_from_json(j);
}

int emit(const ExperimentConfig& config) {
  auto start = std::chrono::steady_clock::now();
  dioph::cli::RunReport report = dioph::cli::run(config);
  std::string text = dioph::cli::render(report);
  if (config.output) {
    std::ofstream out(*config.output);
    if (!out) throw UsageError("cannot write '" + *config.output + "'");
    out << text;
  } else {
    std::cout << text;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << config.command << ": wall time " << seconds << " s\n";
  if (report.invariant_violation) {
    std::cerr << "invariant violation: " << report.header.value("error", "") << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diophantine approximation experiments over lattices in sequence spaces"};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Leaf>> leaves;
  std::map<std::string, CLI::App*> groups;
  for (const std::string& command : dioph::cli::known_commands()) {
    auto leaf = std::make_unique<Leaf>();
    leaf->command = command;
    auto space_at = command.find(' ');
    if (space_at == std::string::npos) {
      leaf->app = app.add_subcommand(command);
    } else {
      std::string group = command.substr(0, space_at);
      if (groups.count(group) == 0) {
        groups[group] = app.add_subcommand(group);
        groups[group]->require_subcommand(1);
      }
      leaf->app = groups[group]->add_subcommand(command.substr(space_at + 1));
    }
    std::vector<std::string> fields = dioph::cli::command_fields(command);
    for (const char* global : {"seed", "output", "cap_bits"}) {
      if (!is_one_of(fields, global)) fields.emplace_back(global);
    }
    for (const std::string& field : fields) {
      Leaf* raw = leaf.get();
      leaf->app->add_option_function<std::string>(
          flag_name(field), [raw, field](const std::string& v) { raw->values[field] = v; },
          is_one_of(kJsonOptions, field) ? "inline JSON or path to a JSON file" : "");
    }
    leaves.push_back(std::move(leaf));
  }
  std::string replay_source;
  CLI::App* replay = app.add_subcommand("replay", "re-run the config echoed in an earlier report");
  replay->add_option("--config", replay_source, "config or report JSON, inline or as a path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (replay->parsed()) return emit(config_from_replay(replay_source));
    for (const auto& leaf : leaves) {
      if (leaf->app->parsed()) return emit(config_from_leaf(*leaf));
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const dioph::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  }
}
