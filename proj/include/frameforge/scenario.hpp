#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frameforge/torus_field.hpp"

namespace frameforge {

struct Scenario {
  std::string name;
  std::string notes;
  GramianField field;
};

// Names accepted by builtin_scenario, in a fixed order.
const std::vector<std::string>& builtin_scenario_names();

// Throws UnknownScenarioError for anything not in the list above.
Scenario builtin_scenario(const std::string& name);

// Resolves a builtin name first, then falls back to loading a file.
Scenario resolve_scenario(const std::string& name_or_path);

Scenario scenario_from_json(const nlohmann::json& j);
// Only generator- or entry-sourced fields can be written back out.
nlohmann::json scenario_to_json(const Scenario& scenario);

Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& scenario, const std::string& path);

}  // namespace frameforge
