#pragma once

// Declarative scenario front end: JSON documents in, deterministic JSON (and
// optional CSV trajectories) out.

#include "geomqm/types.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>

namespace geomqm::scenario {

using Json = nlohmann::ordered_json;

struct ParseError : Error {
  ParseError(std::string code, const std::string& msg)
      : Error(std::move(code), msg) {}
};

enum class Task { Spectrum, Evolve, Uncertainty, Superpose, Star, Bloch };

struct Scenario {
  Task task;
  Eigen::Index dimension = 0;
  std::map<std::string, HermitianOperator> operators;
  std::map<std::string, PureState> states;
  Json parameters;  // validated, task-specific
  std::vector<std::string> warnings;  // e.g. symmetrization applied
};

// Parses and fully validates a scenario document. Errors carry distinct
// machine-readable codes: syntax_error, unknown_field, missing_field,
// invalid_value, dimension_mismatch, non_hermitian, unknown_reference.
Scenario parse_scenario(const std::string& text);

struct ResultDocument {
  Json document;
  std::optional<std::string> csv;  // trajectory table, evolve only
};

ResultDocument run(const Scenario& scenario);

// Locale-independent serialization, doubles at 17 significant digits;
// byte-stable for a fixed input and seed.
std::string serialize(const Json& j);

}  // namespace geomqm::scenario
