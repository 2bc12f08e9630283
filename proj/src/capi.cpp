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

#include "tacorient/tac_orient.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <variant>
#include <vector>

#include "tacorient/approx.hpp"
#include "tacorient/connectivity.hpp"
#include "tacorient/error.hpp"
#include "tacorient/generators.hpp"
#include "tacorient/multigraph.hpp"
#include "tacorient/reach_orient.hpp"
#include "tacorient/wb_orient.hpp"

struct tac_graph {
  tacorient::Multigraph g;
};

struct tac_digraph {
  tacorient::Digraph d;
};

namespace {

using namespace tacorient;

thread_local std::string last_error;
thread_local int last_error_line = 0;
std::atomic<int> thread_count{1};

tac_status fail(tac_status status, const std::string& message, int line = 0) {
  last_error = message;
  last_error_line = line;
  return status;
}

tac_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return TAC_ERR_PARSE;
    case ErrorKind::kInvalidArgument:
      return TAC_ERR_INVALID_ARGUMENT;
    case ErrorKind::kDomain:
      return TAC_ERR_DOMAIN;
    case ErrorKind::kCapacity:
      return TAC_ERR_CAPACITY;
    case ErrorKind::kInternal:
      return TAC_ERR_INTERNAL;
  }
  return TAC_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes. No exception crosses
// the C boundary.
template <class Body>
tac_status guarded(Body&& body) noexcept {
  try {
    body();
    last_error.clear();
    last_error_line = 0;
    return TAC_OK;
  } catch (const ParseError& e) {
    return fail(TAC_ERR_PARSE, e.what(), e.line());
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TAC_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return fail(TAC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TAC_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorKind::kInvalidArgument, message);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tac_graph* wrap(Multigraph g) { return new tac_graph{std::move(g)}; }

Orientation read_heads(const Multigraph& g, const int32_t* heads) {
  require(heads != nullptr || g.edge_count() == 0, "null heads buffer");
  Orientation o(std::vector<Vertex>(heads, heads + g.edge_count()));
  validate_orientation(g, o);
  return o;
}

void write_heads(const Orientation& o, int32_t* heads) {
  require(heads != nullptr || o.size() == 0, "null heads buffer");
  std::copy(o.heads().begin(), o.heads().end(), heads);
}

const Multigraph& graph_of(const tac_graph* g) {
  require(g != nullptr, "null graph handle");
  return g->g;
}

const Digraph& digraph_of(const tac_digraph* d) {
  require(d != nullptr, "null digraph handle");
  return d->d;
}

void require_vertex(int n, int32_t v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorKind::kInvalidArgument,
                "vertex " + std::to_string(v) + " out of range [0, " +
                    std::to_string(n) + ")");
  }
}

WellBalancedOptions wb_options(int32_t max_odd_vertices) {
  WellBalancedOptions options;
  if (max_odd_vertices > 0) options.max_odd_vertices = max_odd_vertices;
  options.threads = thread_count.load();
  return options;
}

BruteForceOptions brute_options(int32_t max_edges) {
  return {.max_edges = max_edges, .threads = thread_count.load()};
}

}  // namespace

extern "C" {

const char* tac_last_error(void) { return last_error.c_str(); }

int tac_last_error_line(void) { return last_error_line; }

void tac_string_free(char* s) { std::free(s); }

void tac_set_thread_count(int threads) {
  thread_count.store(std::max(threads, 1));
}

int tac_thread_count(void) { return thread_count.load(); }

tac_status tac_graph_create(int32_t vertex_count, tac_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(vertex_count >= 0, "negative vertex count");
    *out = wrap(Multigraph(vertex_count));
  });
}

tac_status tac_graph_parse(const char* text, tac_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = wrap(parse_graph(text));
  });
}

tac_status tac_graph_clone(const tac_graph* g, tac_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(graph_of(g));
  });
}

void tac_graph_free(tac_graph* g) { delete g; }

tac_status tac_graph_add_edge(tac_graph* g, int32_t u, int32_t v,
                              int32_t* edge_id) {
  return guarded([&] {
    require(g != nullptr, "null graph handle");
    EdgeId e = g->g.add_edge(u, v);
    if (edge_id != nullptr) *edge_id = e;
  });
}

int32_t tac_graph_vertex_count(const tac_graph* g) {
  return g == nullptr ? 0 : g->g.vertex_count();
}

int32_t tac_graph_edge_count(const tac_graph* g) {
  return g == nullptr ? 0 : g->g.edge_count();
}

tac_status tac_graph_edge(const tac_graph* g, int32_t e, int32_t* u,
                          int32_t* v) {
  return guarded([&] {
    require(u != nullptr && v != nullptr, "null output");
    const Edge& edge = graph_of(g).edge(e);
    *u = edge.u;
    *v = edge.v;
  });
}

tac_status tac_graph_degree(const tac_graph* g, int32_t v, int32_t* degree) {
  return guarded([&] {
    require(degree != nullptr, "null output");
    *degree = graph_of(g).degree(v);
  });
}

tac_status tac_graph_serialize(const tac_graph* g, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = copy_string(serialize_graph(graph_of(g)));
  });
}

tac_status tac_digraph_parse(const char* text, tac_digraph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new tac_digraph{parse_digraph(text)};
  });
}

void tac_digraph_free(tac_digraph* d) { delete d; }

int32_t tac_digraph_vertex_count(const tac_digraph* d) {
  return d == nullptr ? 0 : d->d.vertex_count();
}

int32_t tac_digraph_arc_count(const tac_digraph* d) {
  return d == nullptr ? 0 : d->d.arc_count();
}

tac_status tac_digraph_serialize(const tac_digraph* d, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = copy_string(serialize_digraph(digraph_of(d)));
  });
}

tac_status tac_digraph_to_dot(const tac_digraph* d, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = copy_string(to_dot(digraph_of(d)));
  });
}

tac_status tac_orient(const tac_graph* g, const int32_t* heads,
                      tac_digraph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const Multigraph& graph = graph_of(g);
    *out = new tac_digraph{orient(graph, read_heads(graph, heads))};
  });
}

tac_status tac_orientation_parse(const tac_graph* g, const char* text,
                                 int32_t* heads) {
  return guarded([&] {
    require(text != nullptr, "null text");
    write_heads(parse_orientation(graph_of(g), text), heads);
  });
}

tac_status tac_orientation_serialize(const tac_graph* g, const int32_t* heads,
                                     char** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const Multigraph& graph = graph_of(g);
    *out = copy_string(serialize_orientation(graph, read_heads(graph, heads)));
  });
}

tac_status tac_edge_connectivity(const tac_graph* g, int32_t u, int32_t v,
                                 int32_t* lambda) {
  return guarded([&] {
    require(lambda != nullptr, "null output");
    const Multigraph& graph = graph_of(g);
    require_vertex(graph.vertex_count(), u);
    require_vertex(graph.vertex_count(), v);
    require(u != v, "endpoints must differ");
    *lambda = local_edge_connectivity(graph, u, v).value;
  });
}

tac_status tac_arc_connectivity(const tac_digraph* d, int32_t u, int32_t v,
                                int32_t* lambda) {
  return guarded([&] {
    require(lambda != nullptr, "null output");
    const Digraph& digraph = digraph_of(d);
    require_vertex(digraph.vertex_count(), u);
    require_vertex(digraph.vertex_count(), v);
    require(u != v, "endpoints must differ");
    *lambda = local_arc_connectivity(digraph, u, v).value;
  });
}

tac_status tac_total_arc_connectivity(const tac_digraph* d, int64_t* value) {
  return guarded([&] {
    require(value != nullptr, "null output");
    *value = total_arc_connectivity(digraph_of(d), thread_count.load());
  });
}

tac_status tac_reach_count(const tac_digraph* d, int64_t* value) {
  return guarded([&] {
    require(value != nullptr, "null output");
    *value = reach_count(digraph_of(d));
  });
}

tac_status tac_is_strongly_connected(const tac_digraph* d, int* yes) {
  return guarded([&] {
    require(yes != nullptr, "null output");
    *yes = is_strongly_connected(digraph_of(d)) ? 1 : 0;
  });
}

tac_status tac_two_edge_connected_components(const tac_graph* g,
                                             int32_t* class_of,
                                             int32_t* class_count,
                                             uint8_t* is_bridge) {
  return guarded([&] {
    const Multigraph& graph = graph_of(g);
    require(class_count != nullptr, "null output");
    require(class_of != nullptr || graph.vertex_count() == 0,
            "null class buffer");
    auto tec = two_edge_connected_components(graph);
    std::copy(tec.class_of.begin(), tec.class_of.end(), class_of);
    *class_count = static_cast<int32_t>(tec.classes.size());
    if (is_bridge != nullptr) {
      std::fill(is_bridge, is_bridge + graph.edge_count(), 0);
      for (EdgeId e : tec.bridges) is_bridge[e] = 1;
    }
  });
}

tac_status tac_verify_well_balanced(const tac_graph* g, const int32_t* heads,
                                    tac_wb_report* report) {
  return guarded([&] {
    require(report != nullptr, "null output");
    const Multigraph& graph = graph_of(g);
    WellBalancedVerifier verifier(
        graph, {.apex_fast_path = true, .threads = thread_count.load()});
    WellBalancedReport r = verifier.check(read_heads(graph, heads));
    tac_wb_report out{r.well_balanced ? 1 : 0, -1, -1, -1, -1, -1};
    if (r.violation) {
      out.u = r.violation->u;
      out.v = r.violation->v;
      out.lambda_graph = r.violation->lambda_graph;
      out.forward = r.violation->forward;
      out.backward = r.violation->backward;
    }
    *report = out;
  });
}

tac_status tac_orient_eulerian(const tac_graph* g, int32_t* heads) {
  return guarded([&] { write_heads(eulerian_orientation(graph_of(g)), heads); });
}

tac_status tac_orient_outdegrees(const tac_graph* g, const int32_t* out_degree,
                                 int32_t* heads) {
  return guarded([&] {
    const Multigraph& graph = graph_of(g);
    require(out_degree != nullptr || graph.vertex_count() == 0,
            "null out-degree buffer");
    std::vector<int> phi(out_degree, out_degree + graph.vertex_count());
    OutdegreeResult r = orient_with_outdegrees(graph, phi);
    if (const auto* o = std::get_if<Orientation>(&r)) {
      write_heads(*o, heads);
      return;
    }
    const auto& bad = std::get<OutdegreeInfeasibility>(r);
    std::string msg;
    if (bad.reason == OutdegreeInfeasibility::Reason::kEdgeCountMismatch) {
      msg = "out-degrees sum to " + std::to_string(bad.budget) + " but the "
            "graph has " + std::to_string(bad.induced_edges) + " edges";
    } else {
      msg = "set {";
      for (std::size_t i = 0; i < bad.witness.size(); ++i) {
        msg += (i ? "," : "") + std::to_string(bad.witness[i]);
      }
      msg += "} spans " + std::to_string(bad.induced_edges) +
             " edges but its out-degree budget is " +
             std::to_string(bad.budget);
    }
    throw Error(ErrorKind::kDomain, msg);
  });
}

tac_status tac_orient_well_balanced(const tac_graph* g,
                                    int32_t max_odd_vertices, int32_t* heads) {
  return guarded([&] {
    write_heads(
        well_balanced_orientation(graph_of(g), wb_options(max_odd_vertices)),
        heads);
  });
}

tac_status tac_orient_robbins(const tac_graph* g, int32_t* heads) {
  return guarded([&] { write_heads(robbins_orientation(graph_of(g)), heads); });
}

tac_status tac_orient_max_reach(const tac_graph* g, int32_t* heads) {
  return guarded(
      [&] { write_heads(max_reach_orientation(graph_of(g)), heads); });
}

tac_status tac_orient_approx(const tac_graph* g, int32_t max_odd_vertices,
                             int32_t* heads) {
  return guarded([&] {
    write_heads(
        approx_tac_orientation(graph_of(g), wb_options(max_odd_vertices)),
        heads);
  });
}

tac_status tac_orient_exact(const tac_graph* g, int32_t max_edges,
                            int32_t* heads, int64_t* value) {
  return guarded([&] {
    ExactResult r = brute_force_max_tac(graph_of(g), brute_options(max_edges));
    write_heads(r.orientation, heads);
    if (value != nullptr) *value = r.value;
  });
}

tac_status tac_decide_oco(const tac_graph* g, int64_t k, int32_t max_edges,
                          int* answer) {
  return guarded([&] {
    require(answer != nullptr, "null output");
    *answer = oco_decide(graph_of(g), k, brute_options(max_edges)) ? 1 : 0;
  });
}

tac_status tac_gen_gadget(int32_t alpha, int32_t beta, tac_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(gadget(alpha, beta).graph);
  });
}

tac_status tac_gadget_terminals(int32_t alpha, int32_t beta,
                                int32_t* terminals) {
  return guarded([&] {
    require(terminals != nullptr, "null output");
    GadgetInstance w = gadget(alpha, beta);
    std::copy(w.x.begin(), w.x.end(), terminals);
    std::copy(w.y.begin(), w.y.end(), terminals + w.x.size());
  });
}

tac_status tac_gen_tube(int32_t n, int32_t alpha, tac_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(tube(n, alpha));
  });
}

tac_status tac_gen_tripled_path(int32_t t, tac_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(tripled_path(t));
  });
}

tac_status tac_tripled_path_orientation(int32_t t, tac_tripled_variant variant,
                                        int32_t* heads) {
  return guarded([&] {
    require(variant == TAC_TRIPLED_ALTERNATING || variant == TAC_TRIPLED_FORWARD,
            "unknown variant");
    write_heads(tripled_path_orientation(
                    t, variant == TAC_TRIPLED_FORWARD ? TripledVariant::kForward
                                                      : TripledVariant::kAlternating),
                heads);
  });
}

tac_status tac_gen_random(int32_t n, int32_t m, uint64_t seed,
                          tac_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(random_multigraph(n, m, seed));
  });
}

tac_status tac_gen_oco(const tac_graph* g, const char* labels_text,
                       const char* bounds_text, int32_t p, int32_t q,
                       int validate, int64_t max_vertices, tac_graph** out,
                       char** k_decimal) {
  return guarded([&] {
    require(labels_text != nullptr && out != nullptr && k_decimal != nullptr,
            "null argument");
    SsubwboInstance s;
    s.graph = graph_of(g);
    s.labels = parse_labels(labels_text, s.graph.vertex_count());
    s.bounds = bounds_text != nullptr
                   ? parse_bounds(bounds_text, s.graph.vertex_count())
                   : default_bounds(s.graph, s.labels);
    OcoBuildOptions options;
    options.validate = validate != 0;
    if (max_vertices > 0) options.max_vertices = max_vertices;
    OcoInstance h = build_oco_instance(s, {.p = p, .q = q}, options);
    char* k = copy_string(h.target.k.str());
    *out = wrap(std::move(h.graph));
    *k_decimal = k;
  });
}

tac_status tac_gen_reduction(const tac_graph* g, const char* labels_text,
                             const char* bounds_text, int validate,
                             tac_graph** g1, tac_graph** g2) {
  return guarded([&] {
    require(labels_text != nullptr && bounds_text != nullptr && g1 != nullptr &&
                g2 != nullptr,
            "null argument");
    FsubwboInstance f;
    f.graph = graph_of(g);
    f.labels = parse_labels(labels_text, f.graph.vertex_count());
    f.bounds = parse_bounds(bounds_text, f.graph.vertex_count());
    ReductionGraphs r = build_g1_g2(f, validate != 0);
    auto first = std::make_unique<tac_graph>(tac_graph{std::move(r.g1)});
    *g2 = wrap(std::move(r.g2));
    *g1 = first.release();
  });
}

}  // extern "C"
