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

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tacorient/error.hpp"
#include "tacorient/multigraph.hpp"

using namespace tacorient;

namespace {

Multigraph triangle() { return parse_graph("3 3\n0 1\n1 2\n2 0"); }

Multigraph two_triangles_bridge() {
  return parse_graph("6 7\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2 3\n");
}

int parse_error_line(std::string_view text) {
  try {
    (void)parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse triangle and tripled edge") {
  Multigraph g = triangle();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(2) == Edge{2, 0});

  Multigraph t = parse_graph("2 3\n0 1\n0 1\n0 1");
  CHECK(t.edge_count() == 3);
  CHECK(t.degree(0) == 3);
  CHECK(t.degree(1) == 3);
}

TEST_CASE("parse errors name the line") {
  CHECK(parse_error_line("2 1\n0 0") == 2);
  CHECK(parse_error_line("2 1\n0 2") == 2);
  CHECK(parse_error_line("3 2\n0 1\n1 x") == 3);
  CHECK(parse_error_line("3 2\n0 1") == 3);
  CHECK(parse_error_line("3 1\n0 1\n1 2") == 3);
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("3") == 1);
  CHECK(parse_error_line("-1 0") == 1);
}

TEST_CASE("parse tolerates CRLF and trailing blank lines") {
  Multigraph g = parse_graph("3 2\r\n0 1\r\n2 1\r\n\n\n");
  CHECK(g.edge_count() == 2);
  CHECK(g.edge(1) == Edge{2, 1});
}

TEST_CASE("serialization is canonical and round-trips") {
  Multigraph g = parse_graph("3 3\n2 1\n0 2\n1 0\n");
  CHECK(serialize_graph(g) == "3 3\n0 1\n0 2\n1 2\n");
  Multigraph c = parse_graph(serialize_graph(g));
  CHECK(c == canonical_graph(g));
  CHECK(serialize_graph(c) == serialize_graph(g));
  CHECK(serialize_graph(Multigraph(4)) == "4 0\n");

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Multigraph r = oracle::random_connected(2 + trial % 6, 10, rng);
    Multigraph canon = canonical_graph(r);
    CHECK(parse_graph(serialize_graph(canon)) == canon);
  }
}

TEST_CASE("digraph and orientation files round-trip") {
  Digraph d = parse_digraph("3 3\n0 1\n1 2\n2 0\n");
  CHECK(serialize_digraph(d) == "3 3\n0 1\n1 2\n2 0\n");
  CHECK(parse_digraph(serialize_digraph(d)) == d);

  Multigraph g = triangle();
  Orientation o({1, 2, 0});
  CHECK(serialize_orientation(g, o) == "0 1\n1 2\n2 0\n");
  CHECK(parse_orientation(g, serialize_orientation(g, o)) == o);
  CHECK_THROWS_AS((void)parse_orientation(g, "0 1\n1 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS((void)parse_orientation(g, "0 1\n1 2\n"), ParseError);
}

TEST_CASE("orient examples") {
  Digraph cyc = orient(triangle(), Orientation({1, 2, 0}));
  CHECK(cyc.arc(0) == Arc{0, 1});
  CHECK(cyc.arc(1) == Arc{1, 2});
  CHECK(cyc.arc(2) == Arc{2, 0});

  Multigraph t = parse_graph("2 3\n0 1\n0 1\n0 1");
  Digraph fwd = orient(t, Orientation({1, 1, 1}));
  for (int a = 0; a < 3; ++a) CHECK(fwd.arc(a) == Arc{0, 1});

  Multigraph e = parse_graph("2 1\n0 1");
  CHECK(orient(e, Orientation({0})).arc(0) == Arc{1, 0});
  CHECK_THROWS_AS((void)orient(triangle(), Orientation({2, 2, 0})), Error);
  CHECK_THROWS_AS((void)orient(triangle(), Orientation({1, 2})), Error);
  CHECK(orientation_from_digraph(triangle(), cyc) == Orientation({1, 2, 0}));
}

TEST_CASE("cut degree examples") {
  CHECK(cut_degree(triangle(), VertexSet{0}) == 2);
  Digraph cyc = orient(triangle(), Orientation({1, 2, 0}));
  CHECK(cut_degree(cyc, VertexSet{0, 1}) == DirectedCut{1, 1});
  Multigraph t = parse_graph("2 3\n0 1\n0 1\n0 1");
  CHECK(cut_degree(orient(t, Orientation({1, 1, 1})), VertexSet{0}) ==
        DirectedCut{3, 0});
  CHECK(cut_degree(triangle(), VertexSet{}) == 0);
  CHECK(cut_degree(triangle(), VertexSet{0, 1, 2}) == 0);
  CHECK_THROWS_AS((void)cut_degree(triangle(), VertexSet{3}), Error);
  CHECK_THROWS_AS((void)cut_degree(triangle(), VertexSet{1, 0}), Error);
  CHECK(induced_edge_count(two_triangles_bridge(), VertexSet{0, 1, 2, 3}) == 4);
}

TEST_CASE("cut identities on random orientations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Multigraph g = oracle::random_connected(n, n + static_cast<int>(rng() % 8),
                                            rng);
    Orientation o = oracle::orientation_of(g, rng());
    Digraph d = orient(g, o);
    VertexSet s;
    VertexSet x;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) s.push_back(v);
    }
    DirectedCut c = cut_degree(d, s);
    // Undirected cut splits into both directions.
    CHECK(cut_degree(g, s) == c.out + c.in);
    // Net out-flow of S is the sum of vertex imbalances.
    int imbalance = 0;
    for (Vertex v : s) imbalance += d.out_degree(v) - d.in_degree(v);
    CHECK(c.out - c.in == imbalance);
    // Adding balanced vertices keeps the net flow unchanged.
    for (Vertex v = 0; v < n; ++v) {
      if (d.out_degree(v) == d.in_degree(v)) x.push_back(v);
    }
    VertexSet u;
    std::set_union(s.begin(), s.end(), x.begin(), x.end(),
                   std::back_inserter(u));
    DirectedCut cu = cut_degree(d, u);
    CHECK(cu.out - cu.in == c.out - c.in);
  }
}

TEST_CASE("condense examples") {
  WeightedForest f = condense(two_triangles_bridge(), {{0, 1, 2}, {3, 4, 5}});
  CHECK(f.node_weights == std::vector<int>{3, 3});
  REQUIRE(f.edges.size() == 1);
  CHECK(f.edges[0].edge == 6);
  CHECK(f.class_of == std::vector<int>{0, 0, 0, 1, 1, 1});

  Multigraph path = parse_graph("4 3\n0 1\n1 2\n2 3");
  WeightedForest p = condense(path, {{0}, {1}, {2}, {3}});
  CHECK(p.node_weights == std::vector<int>{1, 1, 1, 1});
  CHECK(p.edges.size() == 3);

  Multigraph tp = parse_graph("3 6\n0 1\n0 1\n0 1\n1 2\n1 2\n1 2");
  WeightedForest t = condense(tp, {{0, 1, 2}});
  CHECK(t.node_weights == std::vector<int>{3});
  CHECK(t.edges.empty());

  CHECK_THROWS_AS((void)condense(triangle(), {{0}, {1}, {2}}), Error);
  CHECK_THROWS_AS((void)condense(triangle(), {{0, 1}}), Error);
  CHECK_THROWS_AS((void)condense(triangle(), {{0, 1}, {1, 2}}), Error);
}

TEST_CASE("induced subgraph keeps parent ids") {
  InducedSubgraph sub = induced_subgraph(two_triangles_bridge(), {3, 4, 5});
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edge_count() == 3);
  CHECK(sub.parent_vertex == std::vector<Vertex>{3, 4, 5});
  CHECK(sub.parent_edge == std::vector<EdgeId>{3, 4, 5});
}

TEST_CASE("dot export") {
  Digraph d = parse_digraph("2 1\n1 0\n");
  CHECK(to_dot(d) == "digraph G {\n  0;\n  1;\n  1 -> 0;\n}\n");
}

TEST_CASE("mutation guards") {
  Multigraph g(2);
  CHECK_THROWS_AS(g.add_edge(0, 0), Error);
  CHECK_THROWS_AS(g.add_edge(0, 2), Error);
  CHECK(g.add_edge(1, 0) == 0);
  CHECK(g.opposite(0, 1) == 0);
  CHECK_THROWS_AS((void)g.opposite(0, 5), Error);
  Digraph d(2);
  CHECK_THROWS_AS(d.add_arc(1, 1), Error);
  d.add_arc(0, 1);
  CHECK(d.reversed().arc(0) == Arc{1, 0});
}
