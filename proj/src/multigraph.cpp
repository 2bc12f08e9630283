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

#include "tacorient/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tacorient/error.hpp"
#include "text.hpp"

namespace tacorient {

namespace {

[[noreturn]] void bad_vertex(Vertex v, int n) {
  throw Error(ErrorKind::kInvalidArgument,
              "vertex " + std::to_string(v) + " out of range [0, " +
                  std::to_string(n) + ")");
}

}  // namespace

// ---- Multigraph -------------------------------------------------------------

Multigraph::Multigraph(int vertex_count)
    : vertex_count_(vertex_count), incident_(vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative vertex count");
  }
}

Multigraph::Multigraph(int vertex_count, std::span<const Edge> edges)
    : Multigraph(vertex_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Vertex Multigraph::add_vertex() {
  incident_.emplace_back();
  return vertex_count_++;
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
  if (!has_vertex(u)) bad_vertex(u, vertex_count_);
  if (!has_vertex(v)) bad_vertex(v, vertex_count_);
  if (u == v) {
    throw Error(ErrorKind::kInvalidArgument,
                "loop at vertex " + std::to_string(u));
  }
  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "edge " + std::to_string(e) + " out of range");
  }
  return edges_[e];
}

std::span<const EdgeId> Multigraph::incident(Vertex v) const {
  if (!has_vertex(v)) bad_vertex(v, vertex_count_);
  return incident_[v];
}

int Multigraph::degree(Vertex v) const {
  return static_cast<int>(incident(v).size());
}

Vertex Multigraph::opposite(EdgeId e, Vertex v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw Error(ErrorKind::kInvalidArgument,
              "vertex " + std::to_string(v) + " is not an endpoint of edge " +
                  std::to_string(e));
}

// ---- Digraph ----------------------------------------------------------------

Digraph::Digraph(int vertex_count)
    : vertex_count_(vertex_count), out_(vertex_count), in_(vertex_count) {
  if (vertex_count < 0) {
    throw Error(ErrorKind::kInvalidArgument, "negative vertex count");
  }
}

Digraph::Digraph(int vertex_count, std::span<const Arc> arcs)
    : Digraph(vertex_count) {
  arcs_.reserve(arcs.size());
  for (const Arc& a : arcs) add_arc(a.tail, a.head);
}

EdgeId Digraph::add_arc(Vertex tail, Vertex head) {
  if (!has_vertex(tail)) bad_vertex(tail, vertex_count_);
  if (!has_vertex(head)) bad_vertex(head, vertex_count_);
  if (tail == head) {
    throw Error(ErrorKind::kInvalidArgument,
                "loop at vertex " + std::to_string(tail));
  }
  auto id = static_cast<EdgeId>(arcs_.size());
  arcs_.push_back({tail, head});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  return id;
}

const Arc& Digraph::arc(EdgeId a) const {
  if (a < 0 || a >= arc_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "arc " + std::to_string(a) + " out of range");
  }
  return arcs_[a];
}

std::span<const EdgeId> Digraph::out_arcs(Vertex v) const {
  if (!has_vertex(v)) bad_vertex(v, vertex_count_);
  return out_[v];
}

std::span<const EdgeId> Digraph::in_arcs(Vertex v) const {
  if (!has_vertex(v)) bad_vertex(v, vertex_count_);
  return in_[v];
}

int Digraph::out_degree(Vertex v) const {
  return static_cast<int>(out_arcs(v).size());
}

int Digraph::in_degree(Vertex v) const {
  return static_cast<int>(in_arcs(v).size());
}

Digraph Digraph::reversed() const {
  Digraph r(vertex_count_);
  for (const Arc& a : arcs_) r.add_arc(a.head, a.tail);
  return r;
}

// ---- orientations -----------------------------------------------------------

void validate_orientation(const Multigraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "orientation has " + std::to_string(o.size()) +
                    " entries, graph has " + std::to_string(g.edge_count()) +
                    " edges");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    Vertex h = o.head(e);
    if (h != ed.u && h != ed.v) {
      throw Error(ErrorKind::kInvalidArgument,
                  "head " + std::to_string(h) + " of edge " +
                      std::to_string(e) + " is not one of its endpoints");
    }
  }
}

Digraph orient(const Multigraph& g, const Orientation& o) {
  validate_orientation(g, o);
  Digraph d(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex h = o.head(e);
    d.add_arc(g.opposite(e, h), h);
  }
  return d;
}

Orientation orientation_from_digraph(const Multigraph& g, const Digraph& d) {
  if (d.arc_count() != g.edge_count() ||
      d.vertex_count() != g.vertex_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "digraph does not match the multigraph");
  }
  std::vector<Vertex> heads(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Arc& a = d.arc(e);
    if (!((a.tail == ed.u && a.head == ed.v) ||
          (a.tail == ed.v && a.head == ed.u))) {
      throw Error(ErrorKind::kInvalidArgument,
                  "arc " + std::to_string(e) + " has different endpoints");
    }
    heads[e] = a.head;
  }
  return Orientation(std::move(heads));
}

// ---- cut queries ------------------------------------------------------------

std::vector<char> vertex_mask(int vertex_count, const VertexSet& s) {
  std::vector<char> mask(vertex_count, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= vertex_count) bad_vertex(s[i], vertex_count);
    if (i > 0 && s[i] <= s[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument,
                  "vertex set must be strictly ascending");
    }
    mask[s[i]] = 1;
  }
  return mask;
}

int cut_degree(const Multigraph& g, const VertexSet& s) {
  auto in_s = vertex_mask(g.vertex_count(), s);
  int count = 0;
  for (const Edge& e : g.edges()) count += in_s[e.u] != in_s[e.v];
  return count;
}

DirectedCut cut_degree(const Digraph& d, const VertexSet& s) {
  auto in_s = vertex_mask(d.vertex_count(), s);
  DirectedCut cut;
  for (const Arc& a : d.arcs()) {
    if (in_s[a.tail] && !in_s[a.head]) ++cut.out;
    if (!in_s[a.tail] && in_s[a.head]) ++cut.in;
  }
  return cut;
}

int induced_edge_count(const Multigraph& g, const VertexSet& s) {
  auto in_s = vertex_mask(g.vertex_count(), s);
  int count = 0;
  for (const Edge& e : g.edges()) count += in_s[e.u] && in_s[e.v];
  return count;
}

// ---- derived graphs ---------------------------------------------------------

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& s) {
  auto in_s = vertex_mask(g.vertex_count(), s);
  std::vector<Vertex> local(g.vertex_count(), -1);
  InducedSubgraph sub;
  sub.graph = Multigraph(static_cast<int>(s.size()));
  sub.parent_vertex = s;
  for (std::size_t i = 0; i < s.size(); ++i) local[s[i]] = static_cast<int>(i);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (in_s[ed.u] && in_s[ed.v]) {
      sub.graph.add_edge(local[ed.u], local[ed.v]);
      sub.parent_edge.push_back(e);
    }
  }
  return sub;
}

WeightedForest condense(const Multigraph& g,
                        const std::vector<VertexSet>& classes) {
  WeightedForest f;
  f.class_of.assign(g.vertex_count(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw Error(ErrorKind::kInvalidArgument, "empty class in partition");
    }
    (void)vertex_mask(g.vertex_count(), classes[c]);  // validates order and range
    for (Vertex v : classes[c]) {
      if (f.class_of[v] != -1) {
        throw Error(ErrorKind::kInvalidArgument,
                    "vertex " + std::to_string(v) + " is in two classes");
      }
      f.class_of[v] = static_cast<int>(c);
    }
    f.node_weights.push_back(static_cast<int>(classes[c].size()));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (f.class_of[v] == -1) {
      throw Error(ErrorKind::kInvalidArgument,
                  "vertex " + std::to_string(v) + " is in no class");
    }
  }

  std::vector<int> parent(classes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    int a = f.class_of[g.edge(e).u];
    int b = f.class_of[g.edge(e).v];
    if (a == b) continue;
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) {
      throw Error(ErrorKind::kDomain,
                  "inter-class edge " + std::to_string(e) +
                      " closes a cycle; the partition is not the "
                      "2-edge-connected partition");
    }
    parent[ra] = rb;
    f.edges.push_back({a, b, e});
  }
  return f;
}

// ---- text formats -----------------------------------------------------------

namespace {

struct Header {
  int n = 0;
  int m = 0;
};

Header parse_header(const std::vector<text::Line>& lines) {
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");
  auto [n, m] = text::parse_pair(lines[0]);
  if (n < 0 || m < 0 || n > (1 << 30) || m > (1 << 30)) {
    throw ParseError(1, "vertex and edge counts must be non-negative");
  }
  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    int at = static_cast<int>(std::min<std::int64_t>(lines.size(), m + 1)) + 1;
    throw ParseError(at, "expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(lines.size() - 1));
  }
  return {static_cast<int>(n), static_cast<int>(m)};
}

std::pair<Vertex, Vertex> parse_endpoints(const text::Line& line, int n) {
  auto [a, b] = text::parse_pair(line);
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw ParseError(line.number, "vertex index out of range [0, " +
                                      std::to_string(n) + ")");
  }
  if (a == b) {
    throw ParseError(line.number, "loop at vertex " + std::to_string(a));
  }
  return {static_cast<Vertex>(a), static_cast<Vertex>(b)};
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  auto lines = text::split_lines(text);
  Header h = parse_header(lines);
  Multigraph g(h.n);
  for (int i = 1; i <= h.m; ++i) {
    auto [u, v] = parse_endpoints(lines[i], h.n);
    g.add_edge(u, v);
  }
  return g;
}

Multigraph canonical_graph(const Multigraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  return Multigraph(g.vertex_count(), edges);
}

std::string serialize_graph(const Multigraph& g) {
  Multigraph c = canonical_graph(g);
  std::ostringstream out;
  out << c.vertex_count() << ' ' << c.edge_count() << '\n';
  for (const Edge& e : c.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Digraph parse_digraph(std::string_view text) {
  auto lines = text::split_lines(text);
  Header h = parse_header(lines);
  Digraph d(h.n);
  for (int i = 1; i <= h.m; ++i) {
    auto [t, hd] = parse_endpoints(lines[i], h.n);
    d.add_arc(t, hd);
  }
  return d;
}

std::string serialize_digraph(const Digraph& d) {
  std::ostringstream out;
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

Orientation parse_orientation(const Multigraph& g, std::string_view text) {
  auto lines = text::split_lines(text);
  if (static_cast<int>(lines.size()) != g.edge_count()) {
    throw ParseError(static_cast<int>(lines.size()) + 1,
                     "expected " + std::to_string(g.edge_count()) +
                         " orientation lines, got " +
                         std::to_string(lines.size()));
  }
  std::vector<Vertex> heads(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [t, h] = text::parse_pair(lines[e]);
    const Edge& ed = g.edge(e);
    if (!((t == ed.u && h == ed.v) || (t == ed.v && h == ed.u))) {
      throw ParseError(lines[e].number,
                       "\"" + std::to_string(t) + " " + std::to_string(h) +
                           "\" is not an orientation of edge " +
                           std::to_string(e) + " {" + std::to_string(ed.u) +
                           "," + std::to_string(ed.v) + "}");
    }
    heads[e] = static_cast<Vertex>(h);
  }
  return Orientation(std::move(heads));
}

std::string serialize_orientation(const Multigraph& g, const Orientation& o) {
  validate_orientation(g, o);
  std::ostringstream out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << g.opposite(e, o.head(e)) << ' ' << o.head(e) << '\n';
  }
  return out.str();
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) {
    out << "  " << a.tail << " -> " << a.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tacorient
