// Scenario runner: `geomqm run <scenario.json> [--csv <path>] [--seed N]`
// executes a task and prints the result document on stdout; `geomqm
// validate <scenario.json>` only parses. Exit codes: 0 success, 2
// validation failure, 3 numerical failure, 4 focal-point exclusion.

#include "geomqm/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using geomqm::scenario::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw geomqm::scenario::ParseError("io_error",
                                       "cannot open scenario file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int error_exit(const geomqm::Error& e) {
  Json doc{{"error", Json{{"code", e.code()}, {"message", e.what()}}}};
  std::cerr << geomqm::scenario::serialize(doc);
  if (e.code() == "focal_point") return 4;
  if (e.code() == "numerical_failure") return 3;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geomqm: Ehrenfest-picture scenario runner"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string csv_path;
  std::optional<std::uint64_t> seed_override;

  CLI::App* run_cmd = app.add_subcommand("run", "execute a scenario");
  run_cmd->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  run_cmd->add_option("--csv", csv_path, "write the trajectory table here");
  run_cmd->add_option("--seed", seed_override, "override the scenario seed");

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse and validate only");
  validate_cmd->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    geomqm::scenario::Scenario scenario =
        geomqm::scenario::parse_scenario(read_file(scenario_path));
    if (validate_cmd->parsed()) {
      std::cout << geomqm::scenario::serialize(Json{{"valid", true}});
      return 0;
    }
    if (seed_override) scenario.parameters["seed"] = *seed_override;
    geomqm::scenario::ResultDocument result = geomqm::scenario::run(scenario);
    if (!csv_path.empty()) {
      if (!result.csv)
        throw geomqm::scenario::ParseError(
            "invalid_value", "--csv is only meaningful for the evolve task");
      std::ofstream out(csv_path, std::ios::binary);
      if (!out)
        throw geomqm::scenario::ParseError("io_error",
                                           "cannot write " + csv_path);
      out << *result.csv;
    }
    std::cout << geomqm::scenario::serialize(result.document);
    return 0;
  } catch (const geomqm::Error& e) {
    return error_exit(e);
  } catch (const std::exception& e) {
    Json doc{{"error", Json{{"code", "internal_error"}, {"message", e.what()}}}};
    std::cerr << geomqm::scenario::serialize(doc);
    return 3;
  }
}
