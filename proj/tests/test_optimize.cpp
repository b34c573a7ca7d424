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

#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "parkplan/optimize.hpp"
#include "parkplan/planner.hpp"

using namespace parkplan;

namespace {

const Car kCar{3.760, 1.625, 10.820, 2.450};
constexpr double kRadius = 10.820;
constexpr double kStep = 0.2;

// Chains steered legs through random intermediate targets; cusps arise from
// the words the steering picks.
Path synthetic_path(std::mt19937_64& rng, int legs, double span) {
  std::uniform_real_distribution<double> coord(-span, span);
  std::uniform_real_distribution<double> angle(0.0, kTau);
  Path path{{Pose(coord(rng), coord(rng), angle(rng)), Direction::None}};
  for (int i = 0; i < legs; ++i) {
    const Pose target(coord(rng), coord(rng), angle(rng));
    const Path leg = steer(path.back().pose, target, kRadius, kStep);
    path.insert(path.end(), leg.begin() + 1, leg.end());
  }
  return path;
}

bool path_edges_free(const Path& path, const ObstacleSet& obstacles) {
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (edge_collides(path[i].pose, path[i + 1].pose, kRadius, kStep, kCar,
                      obstacles)) {
      return false;
    }
  }
  return !path.empty() && !collide_pose(path[0].pose, kCar, obstacles);
}

// Sprinkles circles that leave every original edge free; they block some
// shortcuts instead.
ObstacleSet random_blockers(std::mt19937_64& rng, const Path& path,
                            int count) {
  std::uniform_real_distribution<double> coord(-16.0, 16.0);
  std::uniform_real_distribution<double> radius(0.2, 0.6);
  ObstacleSet set;
  for (int placed = 0, attempts = 0; placed < count && attempts < 400;
       ++attempts) {
    ObstacleSet probe = set;
    probe.circles.push_back({coord(rng), coord(rng), radius(rng)});
    if (path_edges_free(path, probe)) {
      set = probe;
      ++placed;
    }
  }
  return set;
}

void check_output_path(const Path& out, const Path& in,
                       const ObstacleSet& obstacles) {
  REQUIRE(!out.empty());
  CHECK(euclidean_dist(out.front().pose, in.front().pose) < 1e-9);
  CHECK(euclidean_dist(out.back().pose, in.back().pose) < 1e-9);
  CHECK(heading_diff(out.back().pose.theta, in.back().pose.theta) < 1e-9);
  CHECK(path_edges_free(out, obstacles));
}

}  // namespace

TEST_SUITE_BEGIN("optimize");

TEST_CASE("find_tips on a single-direction path") {
  Path path;
  path.push_back({Pose(0, 0, 0), Direction::None});
  for (int i = 1; i <= 10; ++i) {
    path.push_back({Pose(0.5 * i, 0, 0), Direction::Forward});
  }
  const auto tips = find_tips(path);
  CHECK(tips == std::vector<std::size_t>{0, 10});
}

TEST_CASE("find_tips on a forward-backward-forward path") {
  Path path;
  path.push_back({Pose(0, 0, 0), Direction::None});
  for (int i = 1; i <= 4; ++i)
    path.push_back({Pose(0.5 * i, 0, 0), Direction::Forward});
  for (int i = 1; i <= 2; ++i)
    path.push_back({Pose(2.0 - 0.5 * i, 0, 0), Direction::Backward});
  for (int i = 1; i <= 4; ++i)
    path.push_back({Pose(1.0 + 0.5 * i, 0, 0), Direction::Forward});
  const auto tips = find_tips(path);
  REQUIRE(tips.size() == 4);
  CHECK(tips[0] == 0);
  CHECK(tips[1] == 4);
  CHECK(tips[2] == 6);
  CHECK(tips[3] == 10);
}

TEST_CASE("find_tips matches an independent direction scan on planner outputs") {
  Scenario s;
  s.x_min = -12.0;
  s.x_max = 12.0;
  s.y_min = 0.0;
  s.y_max = 10.0;
  s.init = Pose(-8.0, 5.0, 0.0);
  s.goal = Pose(8.0, 4.0, 0.5);
  for (int i = 0; i < 100; ++i) {
    PlannerConfig cfg;
    cfg.rng_seed = 1000 + i;
    cfg.opt = OptMode::None;
    const PlanResult r = plan(s, kCar, cfg);
    REQUIRE(r.goal_found);
    std::size_t alternations = 0;
    for (std::size_t k = 1; k + 1 < r.pre_path.size(); ++k) {
      if (r.pre_path[k].dir != Direction::None &&
          r.pre_path[k + 1].dir != Direction::None &&
          r.pre_path[k].dir != r.pre_path[k + 1].dir) {
        ++alternations;
      }
    }
    CHECK(find_tips(r.pre_path).size() == 1 + alternations + 1);
  }
}

TEST_CASE("dijkstra collapses a two-tip detour to the direct connection") {
  // two forward legs with a bend; the direct curve is shorter and free
  Path path{{Pose(0, 0, 0), Direction::None}};
  Path leg = steer(Pose(0, 0, 0), Pose(8, 0, 0), kRadius, kStep);
  path.insert(path.end(), leg.begin() + 1, leg.end());
  leg = steer(Pose(8, 0, 0), Pose(12, 2.5, 1.0), kRadius, kStep);
  REQUIRE(find_tips(path).size() >= 2);
  path.insert(path.end(), leg.begin() + 1, leg.end());

  ObstacleSet none;
  const double input_cost = path_cost(path, kRadius);
  const OptResult r = opt_path_dijkstra(path, kCar, none, kRadius, kStep);
  const double direct =
      rs_distance(path.front().pose, path.back().pose, kRadius);
  if (direct < input_cost - 1e-9) {
    CHECK(r.improved);
    CHECK(r.cost == doctest::Approx(direct).epsilon(1e-9));
    check_output_path(r.path, path, none);
  } else {
    CHECK_FALSE(r.improved);
  }
}

TEST_CASE("an already optimal path is returned unchanged") {
  const Path path = steer(Pose(0, 0, 0), Pose(9, 0, 0), kRadius, kStep);
  ObstacleSet none;
  const OptResult r = opt_path_dijkstra(path, kCar, none, kRadius, kStep);
  CHECK_FALSE(r.improved);
  CHECK(r.path.size() == path.size());
  CHECK(r.cost == doctest::Approx(path_cost(path, kRadius)));
}

TEST_CASE("smart collapses collinear cusped legs in free space") {
  Path path{{Pose(0, 0, 0), Direction::None}};
  for (int i = 1; i <= 8; ++i)
    path.push_back({Pose(0.5 * i, 0, 0), Direction::Forward});  // to 4.0
  for (int i = 1; i <= 4; ++i)
    path.push_back({Pose(4.0 - 0.5 * i, 0, 0), Direction::Backward});  // to 2
  for (int i = 1; i <= 8; ++i)
    path.push_back({Pose(2.0 + 0.5 * i, 0, 0), Direction::Forward});  // to 6
  ObstacleSet none;
  const OptResult r = opt_path_smart(path, kCar, none, kRadius, kStep);
  CHECK(r.improved);
  CHECK(r.cost == doctest::Approx(6.0).epsilon(1e-9));
  for (const PathPoint& p : r.path) CHECK(p.dir != Direction::Backward);
}

TEST_CASE("blocked direct connection falls back to the input") {
  // one-cusp-free dogleg; the only tips are the endpoints
  Path path{{Pose(0, 0, 0), Direction::None}};
  Path leg = steer(Pose(0, 0, 0), Pose(9, 0, 0), kRadius, kStep);
  path.insert(path.end(), leg.begin() + 1, leg.end());
  leg = steer(Pose(9, 0, 0), Pose(17.0, 1.5, 0.4), kRadius, kStep);
  path.insert(path.end(), leg.begin() + 1, leg.end());
  for (const PathPoint& p : path) {
    REQUIRE(p.dir != Direction::Backward);  // construction must be cusp-free
  }
  REQUIRE(find_tips(path).size() == 2);

  // drop a blocker on the direct curve, clear of the original path
  const Path direct =
      steer(path.front().pose, path.back().pose, kRadius, kStep);
  ObstacleSet set;
  bool placed = false;
  for (const PathPoint& p : direct) {
    ObstacleSet probe;
    probe.circles.push_back({p.pose.x, p.pose.y, 0.22});
    if (path_edges_free(path, probe)) {
      set = probe;
      placed = true;
      break;
    }
  }
  REQUIRE(placed);
  const OptResult dj = opt_path_dijkstra(path, kCar, set, kRadius, kStep);
  CHECK_FALSE(dj.improved);
  CHECK(dj.cost == doctest::Approx(path_cost(path, kRadius)));
  const OptResult sm = opt_path_smart(path, kCar, set, kRadius, kStep);
  CHECK_FALSE(sm.improved);
}

TEST_CASE("dijkstra equals the exhaustive subsequence reference") {
  std::mt19937_64 rng(31337);
  int done = 0;
  while (done < 40) {
    Path path = synthetic_path(rng, 2 + static_cast<int>(rng() % 3), 9.0);
    const auto tips = find_tips(path);
    if (tips.size() < 3 || tips.size() > 12) continue;
    const ObstacleSet obstacles =
        random_blockers(rng, path, 1 + static_cast<int>(rng() % 4));
    if (!path_edges_free(path, obstacles)) continue;

    const double input_cost = path_cost(path, kRadius);
    const double reference = oracle::exhaustive_tip_route_cost(
        path, kCar, obstacles, kRadius, kStep);
    const OptResult dj = opt_path_dijkstra(path, kCar, obstacles, kRadius, kStep);
    const double dj_cost = dj.improved ? dj.cost : input_cost;
    CAPTURE(tips.size());
    CHECK(std::abs(dj_cost - std::min(reference, input_cost)) < 1e-6);

    const OptResult sm = opt_path_smart(path, kCar, obstacles, kRadius, kStep);
    const double sm_cost = sm.improved ? sm.cost : input_cost;
    CHECK(dj_cost <= sm_cost + 1e-9);
    CHECK(sm_cost <= input_cost + 1e-9);
    if (dj.improved) check_output_path(dj.path, path, obstacles);
    if (sm.improved) check_output_path(sm.path, path, obstacles);
    ++done;
  }
}

TEST_CASE("repeated dijkstra application never raises the cost") {
  std::mt19937_64 rng(2718);
  for (int i = 0; i < 20; ++i) {
    const Path path = synthetic_path(rng, 3, 8.0);
    ObstacleSet none;
    const OptResult first = opt_path_dijkstra(path, kCar, none, kRadius, kStep);
    const Path& stage = first.improved ? first.path : path;
    const double stage_cost = path_cost(stage, kRadius);
    const OptResult second =
        opt_path_dijkstra(stage, kCar, none, kRadius, kStep);
    const double final_cost = second.improved ? second.cost : stage_cost;
    CHECK(final_cost <= stage_cost + 1e-9);
  }
}

TEST_SUITE_END();
