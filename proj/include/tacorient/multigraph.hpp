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

// Undirected multigraphs, digraphs and orientations.
//
// Edges are identified by their position in the edge list. Parallel edges are
// distinct objects, and every orientation, cut witness and file format refers
// to edges by that position.

#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tacorient {

using Vertex = int;
using EdgeId = int;

/// Strictly ascending list of vertex indices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count);
  Multigraph(int vertex_count, std::span<const Edge> edges);

  /// Appends a vertex and returns its index.
  Vertex add_vertex();
  /// Appends an edge; loops and out-of-range endpoints throw.
  EdgeId add_edge(Vertex u, Vertex v);

  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int edge_count() const noexcept {
    return static_cast<int>(edges_.size());
  }
  [[nodiscard]] const Edge& edge(EdgeId e) const;
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const EdgeId> incident(Vertex v) const;
  [[nodiscard]] int degree(Vertex v) const;
  /// The endpoint of `e` that is not `v`.
  [[nodiscard]] Vertex opposite(EdgeId e, Vertex v) const;
  [[nodiscard]] bool has_vertex(Vertex v) const noexcept {
    return v >= 0 && v < vertex_count_;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);
  Digraph(int vertex_count, std::span<const Arc> arcs);

  EdgeId add_arc(Vertex tail, Vertex head);

  [[nodiscard]] int vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] int arc_count() const noexcept {
    return static_cast<int>(arcs_.size());
  }
  [[nodiscard]] const Arc& arc(EdgeId a) const;
  [[nodiscard]] std::span<const Arc> arcs() const noexcept { return arcs_; }
  [[nodiscard]] std::span<const EdgeId> out_arcs(Vertex v) const;
  [[nodiscard]] std::span<const EdgeId> in_arcs(Vertex v) const;
  [[nodiscard]] int out_degree(Vertex v) const;
  [[nodiscard]] int in_degree(Vertex v) const;
  [[nodiscard]] bool has_vertex(Vertex v) const noexcept {
    return v >= 0 && v < vertex_count_;
  }
  /// Same vertices, every arc reversed, arc ids preserved.
  [[nodiscard]] Digraph reversed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arcs_ == b.arcs_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

/// Head choice per edge of some multigraph. Entry i is the head of edge i.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<Vertex> heads) : heads_(std::move(heads)) {}

  [[nodiscard]] const std::vector<Vertex>& heads() const noexcept {
    return heads_;
  }
  [[nodiscard]] Vertex head(EdgeId e) const { return heads_.at(e); }
  void set_head(EdgeId e, Vertex h) { heads_.at(e) = h; }
  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(heads_.size());
  }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<Vertex> heads_;
};

/// Throws kInvalidArgument unless `o` has one entry per edge of `g` and every
/// entry is an endpoint of its edge.
void validate_orientation(const Multigraph& g, const Orientation& o);

/// Arc i of the result is edge i directed towards `o.head(i)`.
[[nodiscard]] Digraph orient(const Multigraph& g, const Orientation& o);

/// Orientation whose arcs run from edge.u to edge.v.
[[nodiscard]] Orientation orientation_from_digraph(const Multigraph& g,
                                                   const Digraph& d);

// ---- cut queries ----------------------------------------------------------

/// d_G(S): number of edges with exactly one endpoint in S.
[[nodiscard]] int cut_degree(const Multigraph& g, const VertexSet& s);

struct DirectedCut {
  int out = 0;  // arcs leaving S
  int in = 0;   // arcs entering S

  friend bool operator==(const DirectedCut&, const DirectedCut&) = default;
};

[[nodiscard]] DirectedCut cut_degree(const Digraph& d, const VertexSet& s);

/// Number of edges with both endpoints in S.
[[nodiscard]] int induced_edge_count(const Multigraph& g, const VertexSet& s);

/// Membership mask for S; validates that S is strictly ascending and in range.
[[nodiscard]] std::vector<char> vertex_mask(int vertex_count,
                                            const VertexSet& s);

// ---- derived graphs -------------------------------------------------------

struct InducedSubgraph {
  Multigraph graph;
  std::vector<Vertex> parent_vertex;  // local vertex -> vertex of the parent
  std::vector<EdgeId> parent_edge;    // local edge -> edge of the parent
};

/// G[S] with vertices renumbered in ascending order of S and edges kept in
/// ascending id order.
[[nodiscard]] InducedSubgraph induced_subgraph(const Multigraph& g,
                                               const VertexSet& s);

/// Condensation of a multigraph by a vertex partition.
struct WeightedForest {
  struct ForestEdge {
    int a = 0;
    int b = 0;
    EdgeId edge = 0;  // id of the inter-class edge in the base graph

    friend bool operator==(const ForestEdge&, const ForestEdge&) = default;
  };

  std::vector<int> node_weights;
  std::vector<ForestEdge> edges;
  std::vector<int> class_of;  // base vertex -> node

  [[nodiscard]] int node_count() const noexcept {
    return static_cast<int>(node_weights.size());
  }
};

/// Contracts every class to a node weighted by the class size. Throws
/// kDomain if the inter-class edges do not form a forest.
[[nodiscard]] WeightedForest condense(const Multigraph& g,
                                      const std::vector<VertexSet>& classes);

// ---- text formats ---------------------------------------------------------

[[nodiscard]] Multigraph parse_graph(std::string_view text);
/// Canonical form: "n m", then one "u v" line per edge with u < v, lines in
/// ascending lexicographic order.
[[nodiscard]] std::string serialize_graph(const Multigraph& g);
/// The graph whose edge ids follow the canonical serialization order.
[[nodiscard]] Multigraph canonical_graph(const Multigraph& g);

[[nodiscard]] Digraph parse_digraph(std::string_view text);
/// "n m", then "tail head" per arc in arc order.
[[nodiscard]] std::string serialize_digraph(const Digraph& d);

/// One "tail head" line per edge of `g`, in edge order.
[[nodiscard]] Orientation parse_orientation(const Multigraph& g,
                                            std::string_view text);
[[nodiscard]] std::string serialize_orientation(const Multigraph& g,
                                                const Orientation& o);

/// Standard DOT digraph text.
[[nodiscard]] std::string to_dot(const Digraph& d);

}  // namespace tacorient
