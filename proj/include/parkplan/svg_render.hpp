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

#ifndef PARKPLAN_SVG_RENDER_HPP_
#define PARKPLAN_SVG_RENDER_HPP_

#include <iosfwd>

#include "parkplan/planner.hpp"

namespace parkplan {

/// Draws the scenario to scale (fixed pixels per meter): hatched obstacles,
/// U-shaped init/goal car frames and, when given, the tree edges in gray, the
/// raw path in orange and the optimized path in blue. Each tree edge becomes
/// one polyline along its steered curve.
void render_svg(std::ostream& out, const Scenario& scenario, const Car& car,
                const std::vector<Node>* tree = nullptr,
                const Path* pre_path = nullptr, const Path* path = nullptr);

}  // namespace parkplan

#endif  // PARKPLAN_SVG_RENDER_HPP_
