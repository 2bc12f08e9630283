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

// Instance families: grid gadgets, tubes, tripled paths, random multigraphs
// and the reduction instances built from labeled graphs.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tacorient/multigraph.hpp"

namespace tacorient {

using BigInt = boost::multiprecision::cpp_int;

/// Grid gadget with terminal sets X and Y. Cell (row, col), both 1-based,
/// is vertex (row - 1) * side + (col - 1).
struct GadgetInstance {
  Multigraph graph;
  VertexSet x;  // x_i = (1, i)
  VertexSet y;  // y_i = (side, side - beta + i)
  int side = 0;

  [[nodiscard]] Vertex at(int row, int col) const {
    return (row - 1) * side + (col - 1);
  }
};

/// Requires alpha, beta >= 1 of equal parity.
[[nodiscard]] GadgetInstance gadget(int alpha, int beta);

/// Path on n vertices 0..n-1 with every edge repeated alpha times.
[[nodiscard]] Multigraph tube(int n, int alpha);

struct AttachedTube {
  Multigraph graph;
  /// Tube vertices from the attachment point outwards; path.front() == v.
  std::vector<Vertex> path;
};

/// Appends n - 1 new vertices forming a tube whose first end is `v`.
[[nodiscard]] AttachedTube attach_tube(const Multigraph& g, Vertex v, int n,
                                       int alpha);

/// Path v_1 .. v_t (vertices 0..t-1) with every edge tripled. Edges 3i,
/// 3i+1, 3i+2 join vertices i and i+1.
[[nodiscard]] Multigraph tripled_path(int t);

enum class TripledVariant {
  kAlternating,  // 2 forward + 1 back on odd links, 1 forward + 2 back on even
  kForward,      // every edge from v_i to v_{i+1}
};

[[nodiscard]] Orientation tripled_path_orientation(int t,
                                                   TripledVariant variant);

/// m loopless edges drawn uniformly from ordered vertex pairs with a seeded
/// mt19937_64. Requires n >= 2.
[[nodiscard]] Multigraph random_multigraph(int n, int m, std::uint64_t seed);

enum class VertexLabel { kV3, kV3Prime, kV4, kA, kAPrime };

[[nodiscard]] std::string_view label_name(VertexLabel label);

/// "index label" lines, label in {V3, V3p, V4, a, ap}; every vertex exactly
/// once.
[[nodiscard]] std::vector<VertexLabel> parse_labels(std::string_view text,
                                                    int vertex_count);

/// "index bound" lines; every vertex exactly once.
[[nodiscard]] std::vector<int> parse_bounds(std::string_view text,
                                            int vertex_count);

/// 1 on V3 and the full degree everywhere else.
[[nodiscard]] std::vector<int> default_bounds(
    const Multigraph& g, const std::vector<VertexLabel>& labels);

struct SsubwboInstance {
  Multigraph graph;
  std::vector<int> bounds;
  std::vector<VertexLabel> labels;
};

struct ConditionViolation {
  std::string condition;  // "a" .. "g", or "partition"
  Vertex vertex = -1;     // -1 if the condition is global
  std::string message;
};

/// All violated conditions, at most one entry per (condition, vertex).
[[nodiscard]] std::vector<ConditionViolation> validate_ssubwbo(
    const SsubwboInstance& s);

struct TubeExponents {
  int p = 5;  // tube length n^p at V4, a and a'
  int q = 2;  // tube length n^q at V3
};

struct OcoTarget {
  BigInt k;
  std::int64_t important = 0;        // |I|
  std::int64_t super_important = 0;  // |SI|
  BigInt vertex_count;               // |V(H)|
};

/// k and the pair counts without building H. Does not validate.
[[nodiscard]] OcoTarget oco_target(const SsubwboInstance& s,
                                   TubeExponents exponents = {});

struct OcoBuildOptions {
  bool validate = true;
  /// Largest |V(H)| that will be materialized.
  std::int64_t max_vertices = 5'000'000;
};

struct OcoInstance {
  Multigraph graph;
  OcoTarget target;
  /// Tube path per original vertex; empty for V3'.
  std::vector<std::vector<Vertex>> tubes;
};

/// Attaches an (n^p, d(v))-tube at V4, a, a' and an (n^q, 3)-tube at V3.
/// Validation failures throw kDomain listing the failed conditions.
[[nodiscard]] OcoInstance build_oco_instance(const SsubwboInstance& s,
                                             TubeExponents exponents = {},
                                             const OcoBuildOptions& options = {});

/// Labeled input of the first reduction step. Labels use V3, V3', V4 and a;
/// the out-degree target k is bounds[a].
struct FsubwboInstance {
  Multigraph graph;
  std::vector<int> bounds;
  std::vector<VertexLabel> labels;
};

/// Checks the decidable conditions; the bound condition is read with
/// V3' and V4 at full degree.
[[nodiscard]] std::vector<ConditionViolation> validate_fsubwbo(
    const FsubwboInstance& f);

struct ReductionGraphs {
  Multigraph g1;
  std::vector<int> bounds1;
  Multigraph g2;
  std::vector<int> bounds2;
  std::vector<VertexLabel> labels2;
  GadgetInstance gadget;
  Vertex gadget_offset = 0;  // gadget vertex w is g1 vertex offset + w
  Vertex a = -1;
  Vertex a_prime = -1;  // in g2
};

/// G1 replaces the edges at a by a (2k + mu - d(a), d(a))-gadget; G2 adds two
/// copies of every V4 vertex as neighbors of a, and a' with three edges to a.
/// Vertices of the input keep their ids in both graphs.
[[nodiscard]] ReductionGraphs build_g1_g2(const FsubwboInstance& f,
                                          bool validate = true);

}  // namespace tacorient
