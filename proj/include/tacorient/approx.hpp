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

// The 2/3-approximation for total arc connectivity and exhaustive solvers.

#pragma once

#include <cstdint>

#include "tacorient/multigraph.hpp"
#include "tacorient/wb_orient.hpp"

namespace tacorient {

/// Orientation G1 with 3 * tac(G1) >= 2 * max tac. Starts from
/// G0 = max_reach_orientation(g); edges inside a 2-edge-connected class take
/// the direction of a well-balanced orientation of that class, all other
/// edges keep their direction in G0.
[[nodiscard]] Orientation approx_tac_orientation(
    const Multigraph& g, const WellBalancedOptions& options = {});

struct BruteForceOptions {
  /// Largest edge count accepted; beyond it the call fails with kCapacity.
  int max_edges = 20;
  int threads = 1;
};

struct ExactResult {
  Orientation orientation;
  std::int64_t value = 0;
};

/// Orientation for a counter value. Edge 0 is the most significant bit; a 0
/// bit sends the edge to its lower endpoint.
[[nodiscard]] Orientation orientation_from_mask(const Multigraph& g,
                                                std::uint64_t mask);

/// Maximum tac over all 2^m orientations. The returned orientation is the
/// first maximizer in counter order, independent of the thread count.
[[nodiscard]] ExactResult brute_force_max_tac(
    const Multigraph& g, const BruteForceOptions& options = {});

/// Whether some orientation has tac >= k. Stops at the first witness.
[[nodiscard]] bool oco_decide(const Multigraph& g, std::int64_t k,
                              const BruteForceOptions& options = {});

}  // namespace tacorient
