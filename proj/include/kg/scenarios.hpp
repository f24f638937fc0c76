#pragma once

#include <string>
#include <vector>

#include "kg/config.hpp"

namespace kg {

struct Scenario {
  std::string name;
  std::string description;
  RunConfig config;
};

// Built-in named scenarios. Amplitudes (A, B) are committed constants produced
// once by tools/scenario_oracle (amplitude bisection against the hypothesis
// evaluator), never hand-typed.
const std::vector<Scenario>& built_in_scenarios();

// nullptr when the name is unknown
const Scenario* find_scenario(const std::string& name);

} // namespace kg
