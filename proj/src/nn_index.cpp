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

#include "parkplan/nn_index.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parkplan/reeds_shepp.hpp"

namespace parkplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NNIndex::NNIndex(const NNConfig& config) : cfg_(config) {
  assert(cfg_.iystep > 0.0 && cfg_.y_max > cfg_.y_min);
  const int n = static_cast<int>(
      std::ceil((cfg_.y_max - cfg_.y_min) / cfg_.iystep));
  buckets_.resize(std::max(n, 1));
}

int NNIndex::bucket_of(double y) const {
  const int iy =
      static_cast<int>(std::floor((y - cfg_.y_min) / cfg_.iystep));
  return std::clamp(iy, 0, bucket_count() - 1);
}

void NNIndex::add(const Pose& pose, std::uint32_t id) {
  assert(std::isfinite(pose.y));
  buckets_[bucket_of(pose.y)].push_back({pose.x, pose.y, pose.theta, id});
  ++size_;
}

// Lower bound on |dy| from the query to any node in bucket `b`; zero for the
// query's own bucket.
static double bucket_dy_bound(double qy, double y_min, double h, int b,
                              int iy) {
  if (b == iy) return 0.0;
  if (b < iy) return qy - (y_min + (b + 1) * h);
  return (y_min + b * h) - qy;
}

template <typename CostFn>
std::uint32_t NNIndex::search(const Pose& query, CostFn&& cost) const {
  if (size_ == 0) throw std::logic_error("index empty");
  const int n = bucket_count();
  const int iy = bucket_of(query.y);
  double best = kInf;
  std::uint32_t best_id = 0;
  const auto scan = [&](int b) {
    for (const Entry& e : buckets_[b]) {
      const double c = cost(e);
      if (c < best || (c == best && e.id < best_id)) {
        best = c;
        best_id = e.id;
      }
    }
  };
  for (int as = 0;; ++as) {
    const int lo = iy - as;
    const int hi = iy + as;
    const bool lo_ok = lo >= 0;
    const bool hi_ok = hi < n;
    if (!lo_ok && !hi_ok) break;
    const double dlo =
        lo_ok ? bucket_dy_bound(query.y, cfg_.y_min, cfg_.iystep, lo, iy)
              : kInf;
    const double dhi =
        hi_ok ? bucket_dy_bound(query.y, cfg_.y_min, cfg_.iystep, hi, iy)
              : kInf;
    const double ring_bound = std::max(0.0, std::min(dlo, dhi));
    // Every cost mode dominates |dy|, and ring_bound is nondecreasing in as,
    // so once best undercuts it no unexamined bucket can win.
    if (best < ring_bound) break;
    if (lo_ok) scan(lo);
    if (hi_ok && hi != lo) scan(hi);
  }
  assert(best < kInf);
  return best_id;
}

std::uint32_t NNIndex::nearest(const Pose& query) const {
  return search(query, [&](const Entry& e) {
    return std::hypot(e.x - query.x, e.y - query.y);
  });
}

std::uint32_t NNIndex::nearest_with_cost(const Pose& query,
                                         double turning_radius) const {
  switch (cfg_.cost_mode) {
    case NNCostMode::Euclidean:
      return nearest(query);
    case NNCostMode::ReedsShepp:
      return search(query, [&](const Entry& e) {
        return rs_distance(Pose(e.x, e.y, e.theta), query, turning_radius);
      });
    case NNCostMode::ReedsSheppFlatHeading:
      return search(query, [&](const Entry& e) {
        return rs_distance(Pose(e.x, e.y, query.theta), query, turning_radius);
      });
  }
  return nearest(query);
}

std::vector<std::uint32_t> NNIndex::near_nodes(const Pose& query, double dist,
                                               double turning_radius) const {
  std::vector<std::uint32_t> out;
  if (size_ == 0) return out;
  const auto cost = [&](const Entry& e) -> double {
    switch (cfg_.cost_mode) {
      case NNCostMode::Euclidean:
        return std::hypot(e.x - query.x, e.y - query.y);
      case NNCostMode::ReedsShepp:
        return rs_distance(Pose(e.x, e.y, e.theta), query, turning_radius);
      case NNCostMode::ReedsSheppFlatHeading:
        return rs_distance(Pose(e.x, e.y, query.theta), query, turning_radius);
    }
    return 0.0;
  };
  const int n = bucket_count();
  const int iy = bucket_of(query.y);
  for (int as = 0;; ++as) {
    const int lo = iy - as;
    const int hi = iy + as;
    const bool lo_ok = lo >= 0;
    const bool hi_ok = hi < n;
    if (!lo_ok && !hi_ok) break;
    const double dlo =
        lo_ok ? bucket_dy_bound(query.y, cfg_.y_min, cfg_.iystep, lo, iy)
              : kInf;
    const double dhi =
        hi_ok ? bucket_dy_bound(query.y, cfg_.y_min, cfg_.iystep, hi, iy)
              : kInf;
    if (std::max(0.0, std::min(dlo, dhi)) >= dist) break;
    const auto collect = [&](int b) {
      for (const Entry& e : buckets_[b]) {
        if (cost(e) < dist) out.push_back(e.id);
      }
    };
    if (lo_ok) collect(lo);
    if (hi_ok && hi != lo) collect(hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parkplan
