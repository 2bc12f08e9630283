// Copyright 2026 The tac-orient Authors
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

// Orientations that maximize the number of ordered reachable pairs.

#pragma once

#include <cstdint>
#include <vector>

#include "tacorient/multigraph.hpp"

namespace tacorient {

/// Strongly connected orientation of a 2-edge-connected multigraph: DFS tree
/// edges point away from the root, all other edges point back up. Throws
/// kDomain naming a bridge, or an unreachable vertex if `g` is disconnected.
[[nodiscard]] Orientation robbins_orientation(const Multigraph& g);

struct TreeReachResult {
  /// For each forest edge, the node it points to.
  std::vector<int> head_node;
  /// Sum of w(x) * w(y) over ordered node pairs x != y where y is reachable
  /// from x.
  std::int64_t value = 0;
};

/// Orients the edges of a node-weighted forest to maximize the weighted count
/// of ordered reachable pairs.
///
/// Every tree is rooted at its smallest node. A node keeps a table of states
/// (a, b) -> value, where a is the weight that can reach the node inside the
/// processed part of its subtree, b the weight reachable from it, and value
/// the weighted pair count inside that part. Children are merged in ascending
/// node order; pointing the edge down adds a_parent * b_child pairs, pointing
/// it up adds a_child * b_parent. States dominated in all three coordinates
/// are dropped. Among optimal root states the one with the smallest (a, b)
/// wins. Throws kDomain if the edges contain a cycle.
[[nodiscard]] TreeReachResult tree_reach_dp(const WeightedForest& forest);

/// Orientation of `g` maximizing reach_count: every 2-edge-connected class is
/// oriented strongly, and the bridges follow tree_reach_dp on the
/// condensation.
[[nodiscard]] Orientation max_reach_orientation(const Multigraph& g);

}  // namespace tacorient
