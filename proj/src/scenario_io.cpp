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

#include "parkplan/scenario_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace parkplan {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& text, std::size_t byte,
                             const std::string& what) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream msg;
  msg << "parse error at line " << line << ", column " << col << ": " << what;
  throw ParseError(msg.str());
}

void require_keys(const json& obj, const char* where,
                  std::initializer_list<const char*> keys) {
  for (const auto& item : obj.items()) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
          return item.key() == k;
        }) == keys.end()) {
      throw ParseError(std::string("unknown key \"") + item.key() + "\" in " +
                       where);
    }
  }
  for (const char* k : keys) {
    if (!obj.contains(k)) {
      throw ParseError(std::string("missing key \"") + k + "\" in " + where);
    }
  }
}

double number(const json& obj, const char* where, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ParseError(std::string("key \"") + key + "\" in " + where +
                     " must be a number");
  }
  return v.get<double>();
}

}  // namespace

ScenarioFile load_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(text, e.byte, e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario document must be an object");
  require_keys(doc, "scenario",
               {"bounds", "init", "goal", "car", "circles", "segments"});

  ScenarioFile out;
  const json& bounds = doc.at("bounds");
  require_keys(bounds, "bounds", {"x_min", "x_max", "y_min", "y_max"});
  out.scenario.x_min = number(bounds, "bounds", "x_min");
  out.scenario.x_max = number(bounds, "bounds", "x_max");
  out.scenario.y_min = number(bounds, "bounds", "y_min");
  out.scenario.y_max = number(bounds, "bounds", "y_max");

  const auto read_pose = [&](const char* key) {
    const json& p = doc.at(key);
    require_keys(p, key, {"x", "y", "theta"});
    return Pose(number(p, key, "x"), number(p, key, "y"),
                number(p, key, "theta"));
  };
  out.scenario.init = read_pose("init");
  out.scenario.goal = read_pose("goal");

  const json& car = doc.at("car");
  require_keys(car, "car", {"length", "width", "turning_radius", "wheelbase"});
  out.car.length = number(car, "car", "length");
  out.car.width = number(car, "car", "width");
  out.car.turning_radius = number(car, "car", "turning_radius");
  out.car.wheelbase = number(car, "car", "wheelbase");

  if (!doc.at("circles").is_array())
    throw ParseError("\"circles\" must be an array");
  for (const json& c : doc.at("circles")) {
    require_keys(c, "circles[]", {"x", "y", "r"});
    out.scenario.obstacles.circles.push_back({number(c, "circles[]", "x"),
                                              number(c, "circles[]", "y"),
                                              number(c, "circles[]", "r")});
  }
  if (!doc.at("segments").is_array())
    throw ParseError("\"segments\" must be an array");
  for (const json& s : doc.at("segments")) {
    require_keys(s, "segments[]", {"x1", "y1", "x2", "y2"});
    out.scenario.obstacles.segments.push_back(
        {number(s, "segments[]", "x1"), number(s, "segments[]", "y1"),
         number(s, "segments[]", "x2"), number(s, "segments[]", "y2")});
  }

  validate_scenario(out.scenario, out.car);
  return out;
}

ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario_text(buf.str());
}

Scenario make_obstacle_scenario(const Scenario& base, const Car& car,
                                std::mt19937_64& rng) {
  constexpr double kRadius = 0.25;  // 0.5 m diameter
  const Footprint goal_fp = footprint(base.goal, car);
  const Footprint init_fp = footprint(base.init, car);
  double gx_min = goal_fp.corners[0].x, gx_max = goal_fp.corners[0].x;
  double iy_min = init_fp.corners[0].y, iy_max = init_fp.corners[0].y;
  for (int i = 1; i < 4; ++i) {
    gx_min = std::min(gx_min, goal_fp.corners[i].x);
    gx_max = std::max(gx_max, goal_fp.corners[i].x);
    iy_min = std::min(iy_min, init_fp.corners[i].y);
    iy_max = std::max(iy_max, init_fp.corners[i].y);
  }
  const double x_lo = gx_min - car.length;
  const double x_hi = gx_max + car.length;
  const double y_lo = iy_min - kRadius;
  const double y_hi = iy_max + kRadius;

  const auto draw = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  };

  Scenario out = base;
  out.obstacles.circles.push_back({});
  CircleObstacle& obs = out.obstacles.circles.back();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    obs = {draw(x_lo, x_hi), draw(y_lo, y_hi), kRadius};
    if (obs.x - kRadius < base.x_min || obs.x + kRadius > base.x_max ||
        obs.y - kRadius < base.y_min || obs.y + kRadius > base.y_max) {
      continue;
    }
    // keep the obstacle on open street: clear of the walls and of any
    // preexisting circle
    bool clear = true;
    ObstacleSet probe;
    probe.circles.push_back(obs);
    for (const SegmentObstacle& s : base.obstacles.segments) {
      const double dx = s.x2 - s.x1;
      const double dy = s.y2 - s.y1;
      const double len2 = dx * dx + dy * dy;
      double t = ((obs.x - s.x1) * dx + (obs.y - s.y1) * dy) / len2;
      t = std::clamp(t, 0.0, 1.0);
      const double px = s.x1 + t * dx;
      const double py = s.y1 + t * dy;
      if (std::hypot(obs.x - px, obs.y - py) <= kRadius) {
        clear = false;
        break;
      }
    }
    for (const CircleObstacle& c : base.obstacles.circles) {
      if (std::hypot(obs.x - c.x, obs.y - c.y) <= kRadius + c.r) {
        clear = false;
        break;
      }
    }
    if (!clear) continue;
    if (collide_pose(base.init, car, probe) ||
        collide_pose(base.goal, car, probe)) {
      continue;
    }
    return out;
  }
  throw ScenarioError(
      "invalid scenario: no free spot for a random obstacle near the slot");
}

}  // namespace parkplan
