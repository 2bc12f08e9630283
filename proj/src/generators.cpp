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

#include "tacorient/generators.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <random>

#include "tacorient/connectivity.hpp"
#include "tacorient/error.hpp"
#include "text.hpp"

namespace tacorient {

GadgetInstance gadget(int alpha, int beta) {
  if (alpha < 1 || beta < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "gadget dimensions must be positive");
  }
  if ((alpha - beta) % 2 != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "gadget dimensions must have equal parity (alpha=" +
                    std::to_string(alpha) + ", beta=" + std::to_string(beta) +
                    ")");
  }
  GadgetInstance w;
  const int side = alpha % 2 == 0 ? alpha + beta + 4 : alpha + beta + 5;
  w.side = side;
  w.graph = Multigraph(side * side);
  for (int row = 1; row <= side; ++row) {
    for (int col = 1; col < side; ++col) {
      w.graph.add_edge(w.at(row, col), w.at(row, col + 1));
    }
  }
  for (int row = 1; row < side; ++row) {
    for (int col = 1; col <= side; ++col) {
      w.graph.add_edge(w.at(row, col), w.at(row + 1, col));
    }
  }
  for (int row = 1; row <= side; ++row) {
    w.graph.add_edge(w.at(row, 1), w.at(row, side));
  }
  for (int i = 1; i <= (side - alpha) / 2; ++i) {
    w.graph.add_edge(w.at(1, alpha + 2 * i - 1), w.at(1, alpha + 2 * i));
  }
  for (int i = 1; i <= (side - beta) / 2; ++i) {
    w.graph.add_edge(w.at(side, 2 * i - 1), w.at(side, 2 * i));
  }
  for (int i = 1; i <= alpha; ++i) w.x.push_back(w.at(1, i));
  for (int i = 1; i <= beta; ++i) w.y.push_back(w.at(side, side - beta + i));
  return w;
}

Multigraph tube(int n, int alpha) {
  if (n < 1 || alpha < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "tube length and multiplicity must be positive");
  }
  Multigraph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) {
    for (int c = 0; c < alpha; ++c) g.add_edge(v, v + 1);
  }
  return g;
}

AttachedTube attach_tube(const Multigraph& g, Vertex v, int n, int alpha) {
  if (!g.has_vertex(v)) {
    throw Error(ErrorKind::kInvalidArgument,
                "attachment vertex " + std::to_string(v) + " out of range");
  }
  if (n < 1 || alpha < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "tube length and multiplicity must be positive");
  }
  AttachedTube out{g, {v}};
  for (int i = 1; i < n; ++i) {
    Vertex next = out.graph.add_vertex();
    for (int c = 0; c < alpha; ++c) out.graph.add_edge(out.path.back(), next);
    out.path.push_back(next);
  }
  return out;
}

Multigraph tripled_path(int t) {
  if (t < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "tripled path needs at least 2 vertices");
  }
  return tube(t, 3);
}

Orientation tripled_path_orientation(int t, TripledVariant variant) {
  Multigraph g = tripled_path(t);
  std::vector<Vertex> heads(g.edge_count());
  for (int link = 0; link + 1 < t; ++link) {
    int forward = 3;
    if (variant == TripledVariant::kAlternating) {
      forward = link % 2 == 0 ? 2 : 1;  // link 0 joins v_1 and v_2
    }
    for (int c = 0; c < 3; ++c) {
      heads[3 * link + c] = c < forward ? link + 1 : link;
    }
  }
  return Orientation(std::move(heads));
}

Multigraph random_multigraph(int n, int m, std::uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "random multigraph needs at least 2 vertices");
  }
  if (m < 0) {
    throw Error(ErrorKind::kInvalidArgument, "edge count must be non-negative");
  }
  std::mt19937_64 rng(seed);
  Multigraph g(n);
  const auto un = static_cast<std::uint64_t>(n);
  for (int i = 0; i < m; ++i) {
    auto u = static_cast<Vertex>(rng() % un);
    auto v = static_cast<Vertex>(rng() % (un - 1));
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

std::string_view label_name(VertexLabel label) {
  switch (label) {
    case VertexLabel::kV3:
      return "V3";
    case VertexLabel::kV3Prime:
      return "V3p";
    case VertexLabel::kV4:
      return "V4";
    case VertexLabel::kA:
      return "a";
    case VertexLabel::kAPrime:
      return "ap";
  }
  return "?";
}

namespace {

/// Reads "index value" lines covering every vertex exactly once.
template <typename Convert>
auto parse_vertex_table(std::string_view text, int vertex_count,
                        Convert convert) {
  using Value = decltype(convert(std::string_view{}, 0));
  std::vector<std::optional<Value>> seen(vertex_count);
  for (const text::Line& line : text::split_lines(text)) {
    auto fields = text::split_fields(line.content);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError(line.number, "expected 'index value'");
    }
    std::int64_t v = text::parse_int(fields[0], line.number);
    if (v < 0 || v >= vertex_count) {
      throw ParseError(line.number, "vertex " + std::to_string(v) +
                                        " out of range");
    }
    if (seen[v]) {
      throw ParseError(line.number,
                       "vertex " + std::to_string(v) + " listed twice");
    }
    seen[v] = convert(fields[1], line.number);
  }
  std::vector<Value> out;
  out.reserve(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    if (!seen[v]) {
      throw ParseError(static_cast<int>(text::split_lines(text).size()) + 1,
                       "vertex " + std::to_string(v) + " missing");
    }
    out.push_back(*seen[v]);
  }
  return out;
}

}  // namespace

std::vector<VertexLabel> parse_labels(std::string_view text, int vertex_count) {
  return parse_vertex_table(
      text, vertex_count, [](std::string_view field, int line) {
        static const std::map<std::string_view, VertexLabel> kNames = {
            {"V3", VertexLabel::kV3},
            {"V3p", VertexLabel::kV3Prime},
            {"V4", VertexLabel::kV4},
            {"a", VertexLabel::kA},
            {"ap", VertexLabel::kAPrime}};
        auto it = kNames.find(field);
        if (it == kNames.end()) {
          throw ParseError(line, "unknown label '" + std::string(field) + "'");
        }
        return it->second;
      });
}

std::vector<int> parse_bounds(std::string_view text, int vertex_count) {
  return parse_vertex_table(
      text, vertex_count, [](std::string_view field, int line) {
        std::int64_t b = text::parse_int(field, line);
        if (b < 0 || b > std::numeric_limits<int>::max()) {
          throw ParseError(line, "bound must be a non-negative int");
        }
        return static_cast<int>(b);
      });
}

std::vector<int> default_bounds(const Multigraph& g,
                                const std::vector<VertexLabel>& labels) {
  if (static_cast<int>(labels.size()) != g.vertex_count()) {
    throw Error(ErrorKind::kInvalidArgument, "expected one label per vertex");
  }
  std::vector<int> bounds(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bounds[v] = labels[v] == VertexLabel::kV3 ? 1 : g.degree(v);
  }
  return bounds;
}

namespace {

void check_sizes(const Multigraph& g, const std::vector<int>& bounds,
                 const std::vector<VertexLabel>& labels) {
  if (static_cast<int>(labels.size()) != g.vertex_count() ||
      static_cast<int>(bounds.size()) != g.vertex_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected one label and one bound per vertex");
  }
}

std::optional<Vertex> unique_label(const std::vector<VertexLabel>& labels,
                                   VertexLabel wanted, const char* name,
                                   std::vector<ConditionViolation>& out) {
  std::optional<Vertex> found;
  int count = 0;
  for (Vertex v = 0; v < static_cast<int>(labels.size()); ++v) {
    if (labels[v] == wanted) {
      ++count;
      if (!found) found = v;
    }
  }
  if (count != 1) {
    out.push_back({"partition", -1,
                   "expected exactly one vertex labeled " + std::string(name) +
                       ", found " + std::to_string(count)});
    return std::nullopt;
  }
  return found;
}

int multiplicity(const Multigraph& g, Vertex u, Vertex v) {
  int count = 0;
  for (EdgeId e : g.incident(u)) {
    if (g.opposite(e, u) == v) ++count;
  }
  return count;
}

/// Apex condition shared by both problem variants: d(a) > d(v) and
/// λ(a, v) = d(v) for all v != a.
void check_apex(const Multigraph& g, Vertex a, const std::string& condition,
                std::vector<ConditionViolation>& out) {
  EdgeConnectivity ec(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == a) continue;
    if (g.degree(a) <= g.degree(v)) {
      out.push_back({condition, v,
                     "degree of a (" + std::to_string(g.degree(a)) +
                         ") does not exceed degree of vertex " +
                         std::to_string(v) + " (" +
                         std::to_string(g.degree(v)) + ")"});
      continue;
    }
    int lambda = ec.lambda(a, v);
    if (lambda != g.degree(v)) {
      out.push_back({condition, v,
                     "lambda(a, " + std::to_string(v) + ") = " +
                         std::to_string(lambda) + " but degree is " +
                         std::to_string(g.degree(v))});
    }
  }
}

}  // namespace

std::vector<ConditionViolation> validate_ssubwbo(const SsubwboInstance& s) {
  const Multigraph& g = s.graph;
  check_sizes(g, s.bounds, s.labels);
  std::vector<ConditionViolation> out;
  auto a = unique_label(s.labels, VertexLabel::kA, "a", out);
  auto ap = unique_label(s.labels, VertexLabel::kAPrime, "ap", out);
  if (a) check_apex(g, *a, "a", out);
  if (ap) {
    int to_a = a ? multiplicity(g, *ap, *a) : 0;
    if (g.degree(*ap) != 3 || to_a != 3) {
      out.push_back({"b", *ap,
                     "a' must have degree 3 with all edges to a (degree " +
                         std::to_string(g.degree(*ap)) + ", edges to a " +
                         std::to_string(to_a) + ")"});
    }
  }
  std::map<int, int> degree_count;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++degree_count[g.degree(v)];
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    const VertexLabel label = s.labels[v];
    if ((label == VertexLabel::kV3 || label == VertexLabel::kV3Prime) &&
        d != 3) {
      out.push_back({"c", v, "degree " + std::to_string(d) + ", expected 3"});
    }
    if (label == VertexLabel::kV4) {
      if (d < 4 || d % 2 != 0) {
        out.push_back({"d", v,
                       "degree " + std::to_string(d) +
                           " is not an even number >= 4"});
      } else if (degree_count[d] < 3) {
        out.push_back({"d", v,
                       "fewer than 3 vertices have degree " +
                           std::to_string(d)});
      }
    }
    if (label == VertexLabel::kV3) {
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.opposite(e, v);
        if (s.labels[w] != VertexLabel::kV4) {
          out.push_back({"e", v,
                         "neighbor " + std::to_string(w) + " is not in V4"});
          break;
        }
      }
    }
    if (label == VertexLabel::kV3Prime) {
      bool has_v4 = false;
      for (EdgeId e : g.incident(v)) {
        has_v4 |= s.labels[g.opposite(e, v)] == VertexLabel::kV4;
      }
      if (!has_v4) out.push_back({"f", v, "no neighbor in V4"});
    }
    const int expected = label == VertexLabel::kV3 ? 1 : d;
    if (s.bounds[v] != expected) {
      out.push_back({"g", v,
                     "bound " + std::to_string(s.bounds[v]) + ", expected " +
                         std::to_string(expected)});
    }
  }
  return out;
}

namespace {

bool is_heavy(VertexLabel label) {
  return label == VertexLabel::kV4 || label == VertexLabel::kA ||
         label == VertexLabel::kAPrime;
}

std::string describe(const std::vector<ConditionViolation>& violations) {
  std::string msg = "instance violates";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    msg += (i == 0 ? " (" : "; (") + v.condition + ")";
    if (v.vertex >= 0) msg += " at vertex " + std::to_string(v.vertex);
    msg += ": " + v.message;
  }
  return msg;
}

}  // namespace

OcoTarget oco_target(const SsubwboInstance& s, TubeExponents exponents) {
  const Multigraph& g = s.graph;
  check_sizes(g, s.bounds, s.labels);
  if (exponents.p < 1 || exponents.q < 1) {
    throw Error(ErrorKind::kInvalidArgument, "tube exponents must be >= 1");
  }
  const int n = g.vertex_count();
  const BigInt big_n = n;
  const BigInt long_tube = boost::multiprecision::pow(big_n, exponents.p);
  const BigInt short_tube = boost::multiprecision::pow(big_n, exponents.q);

  OcoTarget t;
  BigInt heavy_degree = 0;
  std::int64_t light_count = 0;
  std::int64_t heavy_count = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (is_heavy(s.labels[v])) {
      heavy_degree += g.degree(v);
      ++heavy_count;
    } else if (s.labels[v] == VertexLabel::kV3) {
      ++light_count;
    }
  }
  BigInt min_degree_sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      VertexLabel lu = s.labels[u];
      VertexLabel lv = s.labels[v];
      if (lu == VertexLabel::kV3Prime || lv == VertexLabel::kV3Prime) continue;
      int in_v3 = (lu == VertexLabel::kV3) + (lv == VertexLabel::kV3);
      if (in_v3 > 1) continue;
      ++t.important;
      if (in_v3 == 0) {
        ++t.super_important;
        min_degree_sum += std::min(g.degree(u), g.degree(v));
      }
    }
  }
  t.k = long_tube * (long_tube - 1) / 2 * heavy_degree +
        long_tube * long_tube * min_degree_sum +
        3 * long_tube * short_tube * (t.important - t.super_important);
  t.vertex_count = big_n + heavy_count * (long_tube - 1) +
                   light_count * (short_tube - 1);
  return t;
}

OcoInstance build_oco_instance(const SsubwboInstance& s,
                               TubeExponents exponents,
                               const OcoBuildOptions& options) {
  if (options.validate) {
    auto violations = validate_ssubwbo(s);
    if (!violations.empty()) {
      throw Error(ErrorKind::kDomain, describe(violations));
    }
  }
  OcoInstance out;
  out.target = oco_target(s, exponents);
  if (out.target.vertex_count > options.max_vertices) {
    throw Error(ErrorKind::kCapacity,
                "instance would have " + out.target.vertex_count.str() +
                    " vertices, more than the cap of " +
                    std::to_string(options.max_vertices));
  }
  const Multigraph& g = s.graph;
  const int n = g.vertex_count();
  const auto long_tube =
      static_cast<int>(boost::multiprecision::pow(BigInt(n), exponents.p));
  const auto short_tube =
      static_cast<int>(boost::multiprecision::pow(BigInt(n), exponents.q));
  out.graph = g;
  out.tubes.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    int length = 0;
    int alpha = 0;
    if (is_heavy(s.labels[v])) {
      length = long_tube;
      alpha = g.degree(v);
    } else if (s.labels[v] == VertexLabel::kV3) {
      length = short_tube;
      alpha = 3;
    } else {
      continue;
    }
    if (alpha == 0) {
      throw Error(ErrorKind::kDomain,
                  "cannot attach a tube of multiplicity 0 at isolated vertex " +
                      std::to_string(v));
    }
    AttachedTube attached = attach_tube(out.graph, v, length, alpha);
    out.graph = std::move(attached.graph);
    out.tubes[v] = std::move(attached.path);
  }
  return out;
}

std::vector<ConditionViolation> validate_fsubwbo(const FsubwboInstance& f) {
  const Multigraph& g = f.graph;
  check_sizes(g, f.bounds, f.labels);
  std::vector<ConditionViolation> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (f.labels[v] == VertexLabel::kAPrime) {
      out.push_back({"partition", v, "label ap is not allowed here"});
    }
  }
  auto a = unique_label(f.labels, VertexLabel::kA, "a", out);
  if (a) check_apex(g, *a, "alpha", out);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    const VertexLabel label = f.labels[v];
    if ((label == VertexLabel::kV3 || label == VertexLabel::kV3Prime) &&
        d != 3) {
      out.push_back({"beta", v, "degree " + std::to_string(d) +
                                    ", expected 3"});
    }
    if (label == VertexLabel::kV4 && (d < 4 || d % 2 != 0)) {
      out.push_back({"gamma", v, "degree " + std::to_string(d) +
                                     " is not an even number >= 4"});
    }
    if (label == VertexLabel::kV3) {
      for (EdgeId e : g.incident(v)) {
        VertexLabel lw = f.labels[g.opposite(e, v)];
        if (lw != VertexLabel::kV4 && lw != VertexLabel::kA) {
          out.push_back({"delta", v, "neighbor outside V4 and a"});
          break;
        }
      }
    }
    if (label == VertexLabel::kV3Prime) {
      bool ok = false;
      for (EdgeId e : g.incident(v)) {
        VertexLabel lw = f.labels[g.opposite(e, v)];
        ok |= lw == VertexLabel::kV4 || lw == VertexLabel::kA;
      }
      if (!ok) out.push_back({"epsilon", v, "no neighbor in V4 or a"});
    }
    if (label == VertexLabel::kA) {
      if (2 * f.bounds[v] < d) {
        out.push_back({"zeta", v,
                       "bound " + std::to_string(f.bounds[v]) +
                           " is below half the degree"});
      }
    } else {
      const int expected = label == VertexLabel::kV3 ? 1 : d;
      if (label != VertexLabel::kAPrime && f.bounds[v] != expected) {
        out.push_back({"zeta", v,
                       "bound " + std::to_string(f.bounds[v]) +
                           ", expected " + std::to_string(expected)});
      }
    }
  }
  return out;
}

ReductionGraphs build_g1_g2(const FsubwboInstance& f, bool validate) {
  const Multigraph& g0 = f.graph;
  check_sizes(g0, f.bounds, f.labels);
  if (validate) {
    auto violations = validate_fsubwbo(f);
    if (!violations.empty()) {
      throw Error(ErrorKind::kDomain, describe(violations));
    }
  }
  const int n0 = g0.vertex_count();
  auto a_it = std::find(f.labels.begin(), f.labels.end(), VertexLabel::kA);
  if (a_it == f.labels.end()) {
    throw Error(ErrorKind::kInvalidArgument, "no vertex labeled a");
  }
  const Vertex a = static_cast<Vertex>(a_it - f.labels.begin());
  const int k = f.bounds[a];
  const int da = g0.degree(a);
  int mu = -1;
  for (Vertex v = 0; v < n0; ++v) {
    if (f.labels[v] == VertexLabel::kV4) mu = std::max(mu, g0.degree(v));
  }
  if (mu < 0) throw Error(ErrorKind::kInvalidArgument, "V4 is empty");
  if (2 * k < da) {
    throw Error(ErrorKind::kInvalidArgument,
                "k = " + std::to_string(k) + " is below half of d(a) = " +
                    std::to_string(da));
  }
  const int alpha = 2 * k + mu - da;
  if (alpha < 1 || da < 1) {
    throw Error(ErrorKind::kInvalidArgument, "gadget dimensions must be positive");
  }

  ReductionGraphs r;
  r.a = a;
  r.gadget = gadget(alpha, da);
  r.gadget_offset = n0;
  r.g1 = Multigraph(n0 + r.gadget.graph.vertex_count());
  std::vector<Vertex> former_neighbors;
  for (EdgeId e = 0; e < g0.edge_count(); ++e) {
    const Edge& ed = g0.edge(e);
    if (ed.u == a || ed.v == a) {
      former_neighbors.push_back(ed.u == a ? ed.v : ed.u);
    } else {
      r.g1.add_edge(ed.u, ed.v);
    }
  }
  for (const Edge& ed : r.gadget.graph.edges()) {
    r.g1.add_edge(n0 + ed.u, n0 + ed.v);
  }
  for (Vertex x : r.gadget.x) r.g1.add_edge(a, n0 + x);
  for (std::size_t i = 0; i < former_neighbors.size(); ++i) {
    r.g1.add_edge(n0 + r.gadget.y[i], former_neighbors[i]);
  }
  r.bounds1.resize(r.g1.vertex_count());
  for (Vertex v = 0; v < r.g1.vertex_count(); ++v) {
    r.bounds1[v] = v < n0 && f.labels[v] == VertexLabel::kV3
                       ? f.bounds[v]
                       : r.g1.degree(v);
  }

  r.g2 = r.g1;
  r.labels2.assign(r.g1.vertex_count(), VertexLabel::kV4);
  for (Vertex v = 0; v < n0; ++v) r.labels2[v] = f.labels[v];
  for (Vertex v = 0; v < n0; ++v) {
    if (f.labels[v] != VertexLabel::kV4) continue;
    for (int copy = 0; copy < 2; ++copy) {
      Vertex b = r.g2.add_vertex();
      for (int c = 0; c < r.g1.degree(v); ++c) r.g2.add_edge(a, b);
      r.labels2.push_back(VertexLabel::kV4);
    }
  }
  r.a_prime = r.g2.add_vertex();
  for (int c = 0; c < 3; ++c) r.g2.add_edge(a, r.a_prime);
  r.labels2.push_back(VertexLabel::kAPrime);
  // A bound equal to the degree is vacuous, so a keeps a vacuous bound after
  // gaining the new edges.
  r.bounds2.resize(r.g2.vertex_count());
  for (Vertex v = 0; v < r.g2.vertex_count(); ++v) {
    r.bounds2[v] = v < r.g1.vertex_count() && v != a ? r.bounds1[v]
                                                     : r.g2.degree(v);
  }
  return r;
}

}  // namespace tacorient
