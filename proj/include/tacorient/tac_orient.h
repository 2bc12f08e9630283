/* Copyright 2026 The tac-orient Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the orientation library.
 *
 * Graphs and digraphs are opaque handles. An orientation of a graph with m
 * edges is an int32_t array of length m holding the head of every edge;
 * functions that produce one write into a caller buffer of exactly m
 * entries. Strings returned through char** are owned by the caller and
 * released with tac_string_free. Every function returns a tac_status; on
 * failure tac_last_error() describes the problem for the calling thread and
 * no output parameter is written. */

#ifndef TACORIENT_TAC_ORIENT_H_
#define TACORIENT_TAC_ORIENT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TAC_API __declspec(dllexport)
#else
#define TAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tac_status {
  TAC_OK = 0,
  TAC_ERR_PARSE = 1,            /* malformed input text */
  TAC_ERR_INVALID_ARGUMENT = 2, /* bad handle, index or parameter */
  TAC_ERR_DOMAIN = 3,           /* input outside the operation's domain */
  TAC_ERR_CAPACITY = 4,         /* a size cap was exceeded */
  TAC_ERR_INTERNAL = 5
} tac_status;

typedef struct tac_graph tac_graph;
typedef struct tac_digraph tac_digraph;

/* Message for the last failure on this thread; empty after a success. */
TAC_API const char* tac_last_error(void);
/* 1-based input line of the last parse failure, or 0. */
TAC_API int tac_last_error_line(void);
TAC_API void tac_string_free(char* s);

/* Worker count for parallel operations; values < 1 mean 1. Results never
 * depend on it. Process-wide, default 1. */
TAC_API void tac_set_thread_count(int threads);
TAC_API int tac_thread_count(void);

/* ---- graphs ---- */

TAC_API tac_status tac_graph_create(int32_t vertex_count, tac_graph** out);
TAC_API tac_status tac_graph_parse(const char* text, tac_graph** out);
TAC_API tac_status tac_graph_clone(const tac_graph* g, tac_graph** out);
TAC_API void tac_graph_free(tac_graph* g);
TAC_API tac_status tac_graph_add_edge(tac_graph* g, int32_t u, int32_t v,
                                      int32_t* edge_id);
TAC_API int32_t tac_graph_vertex_count(const tac_graph* g);
TAC_API int32_t tac_graph_edge_count(const tac_graph* g);
TAC_API tac_status tac_graph_edge(const tac_graph* g, int32_t e, int32_t* u,
                                  int32_t* v);
TAC_API tac_status tac_graph_degree(const tac_graph* g, int32_t v,
                                    int32_t* degree);
/* Canonical text: endpoints ascending per line, lines sorted. */
TAC_API tac_status tac_graph_serialize(const tac_graph* g, char** out);

/* ---- digraphs ---- */

TAC_API tac_status tac_digraph_parse(const char* text, tac_digraph** out);
TAC_API void tac_digraph_free(tac_digraph* d);
TAC_API int32_t tac_digraph_vertex_count(const tac_digraph* d);
TAC_API int32_t tac_digraph_arc_count(const tac_digraph* d);
TAC_API tac_status tac_digraph_serialize(const tac_digraph* d, char** out);
TAC_API tac_status tac_digraph_to_dot(const tac_digraph* d, char** out);

/* ---- orientations ---- */

TAC_API tac_status tac_orient(const tac_graph* g, const int32_t* heads,
                              tac_digraph** out);
/* Reads m "tail head" lines, line i orienting edge i. */
TAC_API tac_status tac_orientation_parse(const tac_graph* g, const char* text,
                                         int32_t* heads);
TAC_API tac_status tac_orientation_serialize(const tac_graph* g,
                                             const int32_t* heads, char** out);

/* ---- connectivity ---- */

TAC_API tac_status tac_edge_connectivity(const tac_graph* g, int32_t u,
                                         int32_t v, int32_t* lambda);
TAC_API tac_status tac_arc_connectivity(const tac_digraph* d, int32_t u,
                                        int32_t v, int32_t* lambda);
/* Sum of λ(u, v) over ordered pairs. */
TAC_API tac_status tac_total_arc_connectivity(const tac_digraph* d,
                                              int64_t* value);
/* Ordered pairs (u, v), u != v, with v reachable from u. */
TAC_API tac_status tac_reach_count(const tac_digraph* d, int64_t* value);
TAC_API tac_status tac_is_strongly_connected(const tac_digraph* d, int* yes);

/* class_of has one entry per vertex; classes are numbered by smallest
 * member. is_bridge has one entry per edge and may be NULL. */
TAC_API tac_status tac_two_edge_connected_components(const tac_graph* g,
                                                     int32_t* class_of,
                                                     int32_t* class_count,
                                                     uint8_t* is_bridge);

typedef struct tac_wb_report {
  int well_balanced;
  /* First violating pair when well_balanced == 0, else all -1. */
  int32_t u, v;
  int32_t lambda_graph, forward, backward;
} tac_wb_report;

TAC_API tac_status tac_verify_well_balanced(const tac_graph* g,
                                            const int32_t* heads,
                                            tac_wb_report* report);

/* ---- orientation algorithms ---- */

/* Requires every degree even. */
TAC_API tac_status tac_orient_eulerian(const tac_graph* g, int32_t* heads);
/* Fails with TAC_ERR_DOMAIN naming a dense set when infeasible. */
TAC_API tac_status tac_orient_outdegrees(const tac_graph* g,
                                         const int32_t* out_degree,
                                         int32_t* heads);
/* max_odd_vertices <= 0 selects the default cap. */
TAC_API tac_status tac_orient_well_balanced(const tac_graph* g,
                                            int32_t max_odd_vertices,
                                            int32_t* heads);
TAC_API tac_status tac_orient_robbins(const tac_graph* g, int32_t* heads);
TAC_API tac_status tac_orient_max_reach(const tac_graph* g, int32_t* heads);
TAC_API tac_status tac_orient_approx(const tac_graph* g,
                                     int32_t max_odd_vertices, int32_t* heads);
/* Exhaustive maximizer; fails with TAC_ERR_CAPACITY when m > max_edges. */
TAC_API tac_status tac_orient_exact(const tac_graph* g, int32_t max_edges,
                                    int32_t* heads, int64_t* value);
TAC_API tac_status tac_decide_oco(const tac_graph* g, int64_t k,
                                  int32_t max_edges, int* answer);

/* ---- generators ---- */

TAC_API tac_status tac_gen_gadget(int32_t alpha, int32_t beta, tac_graph** out);
/* Terminal vertex ids, alpha of X then beta of Y. */
TAC_API tac_status tac_gadget_terminals(int32_t alpha, int32_t beta,
                                        int32_t* terminals);
TAC_API tac_status tac_gen_tube(int32_t n, int32_t alpha, tac_graph** out);
TAC_API tac_status tac_gen_tripled_path(int32_t t, tac_graph** out);

typedef enum tac_tripled_variant {
  TAC_TRIPLED_ALTERNATING = 0, /* tac = 2 C(t,2) + t - 1 */
  TAC_TRIPLED_FORWARD = 1      /* tac = 3 C(t,2) */
} tac_tripled_variant;

TAC_API tac_status tac_tripled_path_orientation(int32_t t,
                                                tac_tripled_variant variant,
                                                int32_t* heads);
TAC_API tac_status tac_gen_random(int32_t n, int32_t m, uint64_t seed,
                                  tac_graph** out);

/* Builds H for a labeled instance. bounds_text may be NULL for the default
 * bounds. k and the vertex count of H come back as decimal strings. When
 * validate is nonzero, violated conditions fail with TAC_ERR_DOMAIN. */
TAC_API tac_status tac_gen_oco(const tac_graph* g, const char* labels_text,
                               const char* bounds_text, int32_t p, int32_t q,
                               int validate, int64_t max_vertices,
                               tac_graph** out, char** k_decimal);

/* Both reduction graphs for a labeled input whose bounds give k at a. */
TAC_API tac_status tac_gen_reduction(const tac_graph* g,
                                     const char* labels_text,
                                     const char* bounds_text, int validate,
                                     tac_graph** g1, tac_graph** g2);

#ifdef __cplusplus
}
#endif

#endif /* TACORIENT_TAC_ORIENT_H_ */
