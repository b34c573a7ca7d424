// Copyright 2026 The parkplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARKPLAN_SCENARIO_IO_HPP_
#define PARKPLAN_SCENARIO_IO_HPP_

#include <random>
#include <stdexcept>
#include <string>

#include "parkplan/planner.hpp"

namespace parkplan {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioFile {
  Scenario scenario;
  Car car;
};

/// Parses a scenario document. Expected JSON keys: bounds {x_min, x_max,
/// y_min, y_max}, init {x, y, theta}, goal {x, y, theta}, car {length, width,
/// turning_radius, wheelbase}, circles [{x, y, r}], segments [{x1, y1, x2,
/// y2}]. Unknown keys are rejected. Throws ParseError with line/column info
/// on malformed input and ScenarioError on invariant violations.
ScenarioFile load_scenario_text(const std::string& text);
ScenarioFile load_scenario_file(const std::string& path);

/// Derives a scenario with one extra circle obstacle of 0.5 m diameter
/// dropped on the street near the parking slot: x uniform within one car
/// length of the goal footprint's x extent, y uniform within the init
/// footprint's y extent padded by the obstacle radius. Rejection keeps the
/// obstacle inside the bounds, clear of existing obstacles and keeps init and
/// goal collision-free.
Scenario make_obstacle_scenario(const Scenario& base, const Car& car,
                                std::mt19937_64& rng);

}  // namespace parkplan

#endif  // PARKPLAN_SCENARIO_IO_HPP_
