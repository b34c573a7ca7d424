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

#ifndef PARKPLAN_NN_INDEX_HPP_
#define PARKPLAN_NN_INDEX_HPP_

#include <cstdint>

#include "parkplan/geometry.hpp"

namespace parkplan {

enum class NNCostMode : std::uint8_t {
  Euclidean = 0,
  ReedsShepp = 1,
  // Reeds-Shepp length with both headings temporarily set to the query's.
  ReedsSheppFlatHeading = 2,
};

struct NNConfig {
  double iystep = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;
  NNCostMode cost_mode = NNCostMode::Euclidean;
};

/// Nearest-neighbor structure bucketing nodes by y. Queries expand a ring of
/// buckets around the query's bucket and stop once the best cost undercuts
/// the |dy| lower bound of every unexamined bucket; since each supported cost
/// dominates |dy|, results are exact for all modes. Ties resolve to the
/// earliest inserted node.
///
/// Single writer: add() must not race with queries; concurrent read-only
/// queries are fine.
class NNIndex {
 public:
  explicit NNIndex(const NNConfig& config);

  /// Appends a node. y outside [y_min, y_max) clamps to the boundary bucket.
  void add(const Pose& pose, std::uint32_t id);

  /// Exact Euclidean nearest neighbor. Throws std::logic_error("index empty")
  /// on an empty index.
  std::uint32_t nearest(const Pose& query) const;

  /// Nearest neighbor under the configured cost mode; turning_radius feeds
  /// the Reeds-Shepp modes.
  std::uint32_t nearest_with_cost(const Pose& query,
                                  double turning_radius) const;

  /// Ids of all nodes whose configured cost to the query is strictly below
  /// dist, in insertion order.
  std::vector<std::uint32_t> near_nodes(const Pose& query, double dist,
                                        double turning_radius) const;

  std::size_t size() const { return size_; }
  int bucket_count() const { return static_cast<int>(buckets_.size()); }
  int bucket_of(double y) const;

 private:
  struct Entry {
    double x, y, theta;
    std::uint32_t id;
  };

  template <typename CostFn>
  std::uint32_t search(const Pose& query, CostFn&& cost) const;

  NNConfig cfg_;
  std::vector<std::vector<Entry>> buckets_;
  std::size_t size_ = 0;
};

}  // namespace parkplan

#endif  // PARKPLAN_NN_INDEX_HPP_
