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

// Local edge- and arc-connectivity, total arc-connectivity, reachability
// counting, 2-edge-connected decomposition and well-balancedness checks.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tacorient/multigraph.hpp"

namespace tacorient {

namespace detail {
class FlowNetwork;
}

/// Minimum cut between a source and a sink. `side` contains the source and
/// not the sink, and its cut value (d(S) or d+(S)) equals `value`.
struct CutWitness {
  int value = 0;
  VertexSet side;
};

/// Repeated λ_D(u, v) queries on one digraph. Parallel arcs are merged into
/// one arc of matching capacity.
class ArcConnectivity {
 public:
  explicit ArcConnectivity(const Digraph& d);
  ~ArcConnectivity();
  ArcConnectivity(const ArcConnectivity& other);
  ArcConnectivity& operator=(const ArcConnectivity& other);
  ArcConnectivity(ArcConnectivity&&) noexcept;
  ArcConnectivity& operator=(ArcConnectivity&&) noexcept;

  /// λ_D(u, v), or `limit` if the connectivity is at least `limit`.
  [[nodiscard]] int lambda(Vertex u, Vertex v, int limit = -1);
  [[nodiscard]] CutWitness witness(Vertex u, Vertex v);
  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }

 private:
  int vertex_count_;
  std::unique_ptr<detail::FlowNetwork> network_;
};

/// Repeated λ_G(u, v) queries on one multigraph, solved on its bidirected
/// image.
class EdgeConnectivity {
 public:
  explicit EdgeConnectivity(const Multigraph& g);
  ~EdgeConnectivity();
  EdgeConnectivity(const EdgeConnectivity& other);
  EdgeConnectivity& operator=(const EdgeConnectivity& other);
  EdgeConnectivity(EdgeConnectivity&&) noexcept;
  EdgeConnectivity& operator=(EdgeConnectivity&&) noexcept;

  [[nodiscard]] int lambda(Vertex u, Vertex v, int limit = -1);
  [[nodiscard]] CutWitness witness(Vertex u, Vertex v);
  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }

 private:
  int vertex_count_;
  std::unique_ptr<detail::FlowNetwork> network_;
};

[[nodiscard]] CutWitness local_edge_connectivity(const Multigraph& g, Vertex u,
                                                 Vertex v);
[[nodiscard]] CutWitness local_arc_connectivity(const Digraph& d, Vertex u,
                                                Vertex v);

/// Symmetric matrix of λ_G; the diagonal is 0.
[[nodiscard]] std::vector<std::vector<int>> edge_connectivity_matrix(
    const Multigraph& g, int threads = 1);
/// Matrix of λ_D(u, v) indexed [u][v]; the diagonal is 0.
[[nodiscard]] std::vector<std::vector<int>> arc_connectivity_matrix(
    const Digraph& d, int threads = 1);

/// Sum of λ_D(u, v) over all ordered pairs, one max-flow per pair.
[[nodiscard]] std::int64_t total_arc_connectivity(const Digraph& d,
                                                  int threads = 1);

struct StrongComponents {
  int count = 0;
  /// Components are numbered in reverse topological order: every arc between
  /// distinct components goes from a higher number to a lower one.
  std::vector<int> component_of;
};

[[nodiscard]] StrongComponents strong_components(const Digraph& d);
[[nodiscard]] bool is_strongly_connected(const Digraph& d);

/// Number of ordered pairs (u, v), u != v, with v reachable from u.
[[nodiscard]] std::int64_t reach_count(const Digraph& d);

struct TwoEdgeConnectedComponents {
  std::vector<VertexSet> classes;  // ordered by smallest member
  std::vector<int> class_of;
  std::vector<EdgeId> bridges;  // ascending
};

[[nodiscard]] TwoEdgeConnectedComponents two_edge_connected_components(
    const Multigraph& g);

struct WellBalancedViolation {
  Vertex u = 0;
  Vertex v = 0;
  int lambda_graph = 0;  // λ_G(u, v)
  int forward = 0;       // λ(u, v) in the orientation
  int backward = 0;      // λ(v, u) in the orientation

  friend bool operator==(const WellBalancedViolation&,
                         const WellBalancedViolation&) = default;
};

struct WellBalancedReport {
  bool well_balanced = true;
  std::optional<WellBalancedViolation> violation;  // first in (u, v) order
};

/// A vertex a with d(a) > d(v) and λ_G(a, v) = d(v) for every other v.
[[nodiscard]] std::optional<Vertex> find_apex(const Multigraph& g);

/// Checks min{λ(u,v), λ(v,u)} >= floor(λ_G(u,v) / 2) for the orientation.
/// λ_G is computed once at construction so that many candidate orientations
/// of the same graph can be checked cheaply.
class WellBalancedVerifier {
 public:
  struct Options {
    /// Check only pairs through an apex vertex when one exists. Equivalent
    /// to the full check for such graphs.
    bool apex_fast_path = false;
    int threads = 1;
  };

  explicit WellBalancedVerifier(const Multigraph& g);
  WellBalancedVerifier(const Multigraph& g, Options options);

  [[nodiscard]] WellBalancedReport check(const Orientation& o) const;
  [[nodiscard]] const std::optional<Vertex>& apex() const noexcept {
    return apex_;
  }

 private:
  Multigraph graph_;
  Options options_;
  std::vector<std::vector<int>> lambda_;
  std::optional<Vertex> apex_;
};

[[nodiscard]] WellBalancedReport is_well_balanced(const Multigraph& g,
                                                  const Orientation& o);

}  // namespace tacorient
