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

// Exercises the shared library through its C header only.

#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tacorient/tac_orient.h"

namespace {

struct GraphHandle {
  tac_graph* g = nullptr;
  explicit GraphHandle(const char* text) {
    REQUIRE(tac_graph_parse(text, &g) == TAC_OK);
  }
  GraphHandle() = default;
  ~GraphHandle() { tac_graph_free(g); }
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
};

struct DigraphHandle {
  tac_digraph* d = nullptr;
  ~DigraphHandle() { tac_digraph_free(d); }
};

std::string take(char* s) {
  std::string out = s;
  tac_string_free(s);
  return out;
}

std::int64_t tac_of(const tac_graph* g, const std::vector<int32_t>& heads) {
  DigraphHandle d;
  REQUIRE(tac_orient(g, heads.data(), &d.d) == TAC_OK);
  std::int64_t value = -1;
  REQUIRE(tac_total_arc_connectivity(d.d, &value) == TAC_OK);
  return value;
}

const char* kTriangle = "3 3\n0 1\n1 2\n2 0\n";

}  // namespace

TEST_CASE("graph round trip and accessors") {
  GraphHandle g("3 3\n2 1\n0 1\n0 2\n");
  CHECK(tac_graph_vertex_count(g.g) == 3);
  CHECK(tac_graph_edge_count(g.g) == 3);
  int32_t u = -1;
  int32_t v = -1;
  REQUIRE(tac_graph_edge(g.g, 0, &u, &v) == TAC_OK);
  CHECK(u == 2);
  CHECK(v == 1);
  int32_t degree = 0;
  REQUIRE(tac_graph_degree(g.g, 1, &degree) == TAC_OK);
  CHECK(degree == 2);
  char* text = nullptr;
  REQUIRE(tac_graph_serialize(g.g, &text) == TAC_OK);
  CHECK(take(text) == "3 3\n0 1\n0 2\n1 2\n");

  GraphHandle built;
  REQUIRE(tac_graph_create(2, &built.g) == TAC_OK);
  int32_t id = -1;
  REQUIRE(tac_graph_add_edge(built.g, 1, 0, &id) == TAC_OK);
  CHECK(id == 0);
  CHECK(tac_graph_add_edge(built.g, 1, 1, &id) == TAC_ERR_INVALID_ARGUMENT);
  CHECK(tac_graph_add_edge(built.g, 0, 5, &id) == TAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("errors carry a status, a message and a line") {
  tac_graph* g = nullptr;
  CHECK(tac_graph_parse("2 1\n0 x\n", &g) == TAC_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(tac_last_error_line() == 2);
  CHECK(std::string(tac_last_error()).size() > 0);

  CHECK(tac_graph_serialize(nullptr, nullptr) == TAC_ERR_INVALID_ARGUMENT);

  GraphHandle ok(kTriangle);
  CHECK(std::string(tac_last_error()).empty());
  CHECK(tac_last_error_line() == 0);

  std::vector<int32_t> bad = {2, 1, 2};
  DigraphHandle d;
  CHECK(tac_orient(ok.g, bad.data(), &d.d) == TAC_ERR_INVALID_ARGUMENT);
  CHECK(d.d == nullptr);
  int32_t lambda = 0;
  CHECK(tac_edge_connectivity(ok.g, 0, 7, &lambda) == TAC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("cyclic triangle through digraph text") {
  DigraphHandle d;
  REQUIRE(tac_digraph_parse("3 3\n0 1\n1 2\n2 0\n", &d.d) == TAC_OK);
  std::int64_t value = 0;
  REQUIRE(tac_total_arc_connectivity(d.d, &value) == TAC_OK);
  CHECK(value == 6);
  REQUIRE(tac_reach_count(d.d, &value) == TAC_OK);
  CHECK(value == 6);
  int strong = 0;
  REQUIRE(tac_is_strongly_connected(d.d, &strong) == TAC_OK);
  CHECK(strong == 1);
  int32_t lambda = 0;
  REQUIRE(tac_arc_connectivity(d.d, 0, 1, &lambda) == TAC_OK);
  CHECK(lambda == 1);
  char* dot = nullptr;
  REQUIRE(tac_digraph_to_dot(d.d, &dot) == TAC_OK);
  CHECK(take(dot).find("0 -> 1;") != std::string::npos);
}

TEST_CASE("orientation algorithms") {
  GraphHandle g(kTriangle);
  std::vector<int32_t> heads(3);
  REQUIRE(tac_orient_approx(g.g, 0, heads.data()) == TAC_OK);
  CHECK(tac_of(g.g, heads) == 6);
  REQUIRE(tac_orient_well_balanced(g.g, 0, heads.data()) == TAC_OK);
  tac_wb_report report{};
  REQUIRE(tac_verify_well_balanced(g.g, heads.data(), &report) == TAC_OK);
  CHECK(report.well_balanced == 1);
  CHECK(report.u == -1);
  REQUIRE(tac_orient_robbins(g.g, heads.data()) == TAC_OK);
  CHECK(tac_of(g.g, heads) == 6);
  REQUIRE(tac_orient_max_reach(g.g, heads.data()) == TAC_OK);
  CHECK(tac_of(g.g, heads) == 6);
  REQUIRE(tac_orient_eulerian(g.g, heads.data()) == TAC_OK);
  CHECK(tac_of(g.g, heads) == 6);
  std::int64_t best = 0;
  REQUIRE(tac_orient_exact(g.g, 20, heads.data(), &best) == TAC_OK);
  CHECK(best == 6);

  std::vector<int32_t> path_heads = {1, 2, 2};
  REQUIRE(tac_verify_well_balanced(g.g, path_heads.data(), &report) == TAC_OK);
  CHECK(report.well_balanced == 0);
  CHECK(report.u >= 0);

  char* text = nullptr;
  REQUIRE(tac_orientation_serialize(g.g, path_heads.data(), &text) == TAC_OK);
  std::string serialized = take(text);
  std::vector<int32_t> back(3);
  REQUIRE(tac_orientation_parse(g.g, serialized.c_str(), back.data()) == TAC_OK);
  CHECK(back == path_heads);

  int answer = -1;
  REQUIRE(tac_decide_oco(g.g, 6, 20, &answer) == TAC_OK);
  CHECK(answer == 1);
  REQUIRE(tac_decide_oco(g.g, 7, 20, &answer) == TAC_OK);
  CHECK(answer == 0);
  CHECK(tac_orient_exact(g.g, 2, heads.data(), &best) == TAC_ERR_CAPACITY);
}

TEST_CASE("domain errors") {
  GraphHandle path("3 2\n0 1\n1 2\n");
  std::vector<int32_t> heads(2);
  CHECK(tac_orient_robbins(path.g, heads.data()) == TAC_ERR_DOMAIN);
  CHECK(std::string(tac_last_error()).find("bridge") != std::string::npos);
  CHECK(tac_orient_eulerian(path.g, heads.data()) == TAC_ERR_DOMAIN);

  GraphHandle triangle(kTriangle);
  std::vector<int32_t> out = {2, 1, 0};
  std::vector<int32_t> tri_heads(3);
  CHECK(tac_orient_outdegrees(triangle.g, out.data(), tri_heads.data()) ==
        TAC_OK);
  std::vector<int32_t> dense = {0, 0, 3};
  CHECK(tac_orient_outdegrees(triangle.g, dense.data(), tri_heads.data()) ==
        TAC_ERR_DOMAIN);
  std::vector<int32_t> too_many = {2, 2, 2};
  CHECK(tac_orient_outdegrees(triangle.g, too_many.data(), tri_heads.data()) ==
        TAC_ERR_DOMAIN);
}

TEST_CASE("two-edge-connected components") {
  GraphHandle g("6 7\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2 3\n");
  std::vector<int32_t> class_of(6);
  std::vector<std::uint8_t> bridge(7);
  int32_t classes = 0;
  REQUIRE(tac_two_edge_connected_components(g.g, class_of.data(), &classes,
                                            bridge.data()) == TAC_OK);
  CHECK(classes == 2);
  CHECK(class_of == std::vector<int32_t>{0, 0, 0, 1, 1, 1});
  CHECK(bridge == std::vector<std::uint8_t>{0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("tripled path values") {
  GraphHandle g;
  REQUIRE(tac_gen_tripled_path(7, &g.g) == TAC_OK);
  std::vector<int32_t> heads(tac_graph_edge_count(g.g));
  REQUIRE(tac_tripled_path_orientation(7, TAC_TRIPLED_FORWARD, heads.data()) ==
          TAC_OK);
  CHECK(tac_of(g.g, heads) == 63);
  REQUIRE(tac_tripled_path_orientation(7, TAC_TRIPLED_ALTERNATING,
                                       heads.data()) == TAC_OK);
  CHECK(tac_of(g.g, heads) == 48);
}

TEST_CASE("generators") {
  GraphHandle w;
  REQUIRE(tac_gen_gadget(4, 2, &w.g) == TAC_OK);
  CHECK(tac_graph_vertex_count(w.g) == 100);
  CHECK(tac_graph_edge_count(w.g) == 197);
  std::vector<int32_t> terminals(6);
  REQUIRE(tac_gadget_terminals(4, 2, terminals.data()) == TAC_OK);
  for (int32_t t : terminals) {
    int32_t degree = 0;
    REQUIRE(tac_graph_degree(w.g, t, &degree) == TAC_OK);
    CHECK(degree == 3);
  }

  GraphHandle t;
  REQUIRE(tac_gen_tube(4, 3, &t.g) == TAC_OK);
  CHECK(tac_graph_vertex_count(t.g) == 4);
  CHECK(tac_graph_edge_count(t.g) == 9);

  GraphHandle r1;
  GraphHandle r2;
  REQUIRE(tac_gen_random(5, 8, 42, &r1.g) == TAC_OK);
  REQUIRE(tac_gen_random(5, 8, 42, &r2.g) == TAC_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(tac_graph_serialize(r1.g, &a) == TAC_OK);
  REQUIRE(tac_graph_serialize(r2.g, &b) == TAC_OK);
  CHECK(take(a) == take(b));
}

TEST_CASE("oco instance and reduction") {
  GraphHandle toy(
      "6 12\n0 1\n0 1\n0 1\n0 2\n0 3\n0 4\n5 2\n5 3\n5 4\n2 3\n3 4\n2 4\n");
  const char* labels = "0 a\n1 ap\n2 V4\n3 V4\n4 V4\n5 V3\n";
  GraphHandle h;
  char* k = nullptr;
  CHECK(tac_gen_oco(toy.g, labels, nullptr, 2, 1, 1, 0, &h.g, &k) ==
        TAC_ERR_DOMAIN);
  CHECK(std::string(tac_last_error()).find("(a)") != std::string::npos);
  REQUIRE(tac_gen_oco(toy.g, labels, nullptr, 2, 1, 0, 0, &h.g, &k) == TAC_OK);
  CHECK(take(k) == "63126");
  CHECK(tac_graph_vertex_count(h.g) == 186);
  CHECK(tac_gen_oco(toy.g, "0 a\n", nullptr, 2, 1, 0, 0, &h.g, &k) ==
        TAC_ERR_PARSE);

  GraphHandle f(
      "6 12\n0 1\n0 1\n0 2\n0 2\n0 3\n0 3\n4 1\n4 2\n4 3\n5 1\n5 2\n5 3\n");
  GraphHandle g1;
  GraphHandle g2;
  REQUIRE(tac_gen_reduction(f.g, "0 a\n1 V4\n2 V4\n3 V4\n4 V3\n5 V3\n",
                            "0 3\n1 4\n2 4\n3 4\n4 1\n5 1\n", 1, &g1.g,
                            &g2.g) == TAC_OK);
  CHECK(tac_graph_vertex_count(g1.g) == 6 + 14 * 14);
  CHECK(tac_graph_vertex_count(g2.g) == tac_graph_vertex_count(g1.g) + 7);
}

TEST_CASE("thread count") {
  tac_set_thread_count(0);
  CHECK(tac_thread_count() == 1);
  tac_set_thread_count(3);
  CHECK(tac_thread_count() == 3);
  GraphHandle g(kTriangle);
  std::vector<int32_t> heads(3);
  std::int64_t best = 0;
  REQUIRE(tac_orient_exact(g.g, 20, heads.data(), &best) == TAC_OK);
  CHECK(best == 6);
  tac_set_thread_count(1);
}
