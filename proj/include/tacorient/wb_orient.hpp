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

// Eulerian, degree-prescribed and well-balanced orientations.

#pragma once

#include <cstdint>
#include <span>
#include <variant>

#include "tacorient/multigraph.hpp"

namespace tacorient {

/// Orients every edge along an Euler tour of its component, so that
/// d+(v) = d-(v) everywhere. Throws kDomain naming the first odd vertex.
[[nodiscard]] Orientation eulerian_orientation(const Multigraph& g);

/// Why no orientation with the requested out-degrees exists.
struct OutdegreeInfeasibility {
  enum class Reason {
    kEdgeCountMismatch,  // sum of the requested out-degrees != |E|
    kDenseSet,           // some S spans more edges than its out-degree budget
  };
  Reason reason = Reason::kDenseSet;
  VertexSet witness;            // all vertices for kEdgeCountMismatch
  std::int64_t induced_edges;   // i_G(S)
  std::int64_t budget;          // sum of φ over S
};

using OutdegreeResult = std::variant<Orientation, OutdegreeInfeasibility>;

/// Orientation with d+(v) = out_degree[v] for all v, or a certificate that
/// none exists. Solved as a flow from edges to the endpoint that becomes
/// their tail.
[[nodiscard]] OutdegreeResult orient_with_outdegrees(
    const Multigraph& g, std::span<const int> out_degree);

struct WellBalancedOptions {
  /// Largest number of odd-degree vertices per component for which the
  /// pairing search is attempted; beyond it the call fails with kCapacity.
  int max_odd_vertices = 16;
  /// Worker count for the verifier's flow computations.
  int threads = 1;
};

/// A certified well-balanced orientation.
///
/// Per connected component, the odd-degree vertices are paired up in
/// lexicographic backtracking order. For each pairing M the graph G + M is
/// oriented along Euler tours, the arcs of M are dropped, and the result is
/// run through the well-balancedness verifier. The first certified candidate
/// is returned, so the output is deterministic. Some pairing always works,
/// so exhausting the search is reported as kInternal.
[[nodiscard]] Orientation well_balanced_orientation(
    const Multigraph& g, const WellBalancedOptions& options = {});

}  // namespace tacorient
