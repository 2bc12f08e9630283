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

// Property checks for grid gadgets. Each returns the number of violations.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "tacorient/connectivity.hpp"
#include "tacorient/generators.hpp"
#include "tacorient/wb_orient.hpp"

namespace gadget_checks {

using namespace tacorient;

inline VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline int count_in(const VertexSet& s, const VertexSet& t) {
  int c = 0;
  for (Vertex v : t) c += std::binary_search(s.begin(), s.end(), v);
  return c;
}

inline VertexSet complement(int n, const VertexSet& s) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  }
  return out;
}

/// |I_S| + 2 |J_S|: columns plus twice the rows that S touches.
inline int row_column_weight(const GadgetInstance& w, const VertexSet& s) {
  std::vector<char> col(w.side, 0);
  std::vector<char> row(w.side, 0);
  for (Vertex v : s) {
    row[v / w.side] = 1;
    col[v % w.side] = 1;
  }
  int cols = 0;
  int rows = 0;
  for (int i = 0; i < w.side; ++i) {
    cols += col[i];
    rows += row[i];
  }
  return cols + 2 * rows;
}

/// λ(u, v) = min(d(u), d(v)) over all unordered pairs.
inline int check_lambda_equals_min_degree(const GadgetInstance& w,
                                          int threads = 1) {
  auto lam = edge_connectivity_matrix(w.graph, threads);
  int bad = 0;
  const int n = w.graph.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bad += lam[u][v] != std::min(w.graph.degree(u), w.graph.degree(v));
    }
  }
  return bad;
}

/// Terminals have degree 3, all other vertices degree 4, and X and Y are
/// disjoint and non-adjacent.
inline int check_degrees(const GadgetInstance& w) {
  VertexSet xy = sorted([&] {
    VertexSet t = w.x;
    t.insert(t.end(), w.y.begin(), w.y.end());
    return t;
  }());
  int bad = static_cast<int>(w.x.size() + w.y.size() - xy.size());
  for (Vertex v = 0; v < w.graph.vertex_count(); ++v) {
    bool terminal = std::binary_search(xy.begin(), xy.end(), v);
    bad += w.graph.degree(v) != (terminal ? 3 : 4);
  }
  VertexSet ys = sorted(w.y);
  for (Vertex x : w.x) {
    for (EdgeId e : w.graph.incident(x)) {
      bad += std::binary_search(ys.begin(), ys.end(), w.graph.opposite(e, x));
    }
  }
  return bad;
}

/// Every mapping φ: X ∪ Y -> {1, 2} with equally many 1s and 2s, in
/// lexicographic order of the value sequence over x_1..x_α, y_1..y_β.
inline std::vector<std::vector<int>> balanced_mappings(int terminals) {
  std::vector<std::vector<int>> out;
  if (terminals % 2 != 0) return out;
  for (std::uint32_t mask = 0; mask < (1U << terminals); ++mask) {
    if (__builtin_popcount(mask) * 2 != terminals) continue;
    std::vector<int> phi(terminals);
    for (int i = 0; i < terminals; ++i) {
      phi[i] = (mask >> (terminals - 1 - i)) & 1U ? 2 : 1;
    }
    out.push_back(phi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// For one mapping φ: the prescribed out-degrees are realizable,
/// and the realization has λ(u, v) = min(d+(u), d-(v)) for all ordered pairs.
inline int check_mapping(const GadgetInstance& w, const std::vector<int>& phi,
                         int threads = 1) {
  const int n = w.graph.vertex_count();
  std::vector<int> out_degree(n, 2);
  for (std::size_t i = 0; i < w.x.size(); ++i) out_degree[w.x[i]] = phi[i];
  for (std::size_t i = 0; i < w.y.size(); ++i) {
    out_degree[w.y[i]] = phi[w.x.size() + i];
  }
  auto result = orient_with_outdegrees(w.graph, out_degree);
  if (!std::holds_alternative<Orientation>(result)) return 1;
  Digraph d = orient(w.graph, std::get<Orientation>(result));
  int bad = 0;
  for (Vertex v = 0; v < n; ++v) bad += d.out_degree(v) != out_degree[v];
  auto lam = arc_connectivity_matrix(d, threads);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      bad += lam[u][v] != std::min(d.out_degree(u), d.in_degree(v));
    }
  }
  return bad;
}

/// A connected set grown from a random X terminal until it reaches Y, then
/// extended by a random number of further steps.
inline VertexSet random_connected_xy_set(const GadgetInstance& w,
                                         std::mt19937_64& rng) {
  const int n = w.graph.vertex_count();
  VertexSet ys = sorted(w.y);
  std::vector<char> in(n, 0);
  VertexSet members{w.x[rng() % w.x.size()]};
  in[members[0]] = 1;
  bool has_y = false;
  int extra = static_cast<int>(rng() % (n / 2 + 1));
  while (!has_y || extra-- > 0) {
    Vertex from = members[rng() % members.size()];
    auto inc = w.graph.incident(from);
    Vertex to = w.graph.opposite(inc[rng() % inc.size()], from);
    if (in[to]) continue;
    in[to] = 1;
    members.push_back(to);
    has_y |= std::binary_search(ys.begin(), ys.end(), to);
    if (static_cast<int>(members.size()) == n) break;
  }
  return sorted(members);
}

/// d(S) >= |Y - S| for a set S meeting X.
inline bool xy_cut_bound(const GadgetInstance& w, const VertexSet& s) {
  return cut_degree(w.graph, s) >=
         static_cast<int>(w.y.size()) - count_in(s, w.y);
}

/// A set avoiding Y: either a random subset at a random density or a random
/// connected blob.
inline VertexSet random_set_avoiding_y(const GadgetInstance& w,
                                       std::mt19937_64& rng) {
  const int n = w.graph.vertex_count();
  VertexSet ys = sorted(w.y);
  VertexSet s;
  if (rng() % 2) {
    const std::uint64_t density = 1 + rng() % 99;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 100 < density && !std::binary_search(ys.begin(), ys.end(), v)) {
        s.push_back(v);
      }
    }
    return s;
  }
  std::vector<char> in(n, 0);
  Vertex start = w.x[rng() % w.x.size()];
  s.push_back(start);
  in[start] = 1;
  int target = 1 + static_cast<int>(rng() % n);
  for (int step = 0; step < 4 * n && static_cast<int>(s.size()) < target; ++step) {
    Vertex from = s[rng() % s.size()];
    auto inc = w.graph.incident(from);
    Vertex to = w.graph.opposite(inc[rng() % inc.size()], from);
    if (in[to] || std::binary_search(ys.begin(), ys.end(), to)) continue;
    in[to] = 1;
    s.push_back(to);
  }
  return sorted(s);
}

/// d(S) >= min(|S ∩ X|, |Y|) for a set S avoiding Y.
inline bool y_free_cut_bound(const GadgetInstance& w, const VertexSet& s) {
  return cut_degree(w.graph, s) >=
         std::min(count_in(s, w.x), static_cast<int>(w.y.size()));
}

/// Any random subset: uniform density, a connected blob, or a union of rows.
inline VertexSet random_set(const GadgetInstance& w, std::mt19937_64& rng) {
  const int n = w.graph.vertex_count();
  VertexSet s;
  switch (rng() % 3) {
    case 0: {
      const std::uint64_t density = 1 + rng() % 99;
      for (Vertex v = 0; v < n; ++v) {
        if (rng() % 100 < density) s.push_back(v);
      }
      break;
    }
    case 1: {
      std::vector<char> in(n, 0);
      Vertex start = static_cast<Vertex>(rng() % n);
      s.push_back(start);
      in[start] = 1;
      int target = 1 + static_cast<int>(rng() % n);
      for (int step = 0; step < 4 * n && static_cast<int>(s.size()) < target;
           ++step) {
        Vertex from = s[rng() % s.size()];
        auto inc = w.graph.incident(from);
        Vertex to = w.graph.opposite(inc[rng() % inc.size()], from);
        if (in[to]) continue;
        in[to] = 1;
        s.push_back(to);
      }
      break;
    }
    default: {
      for (int row = 0; row < w.side; ++row) {
        if (rng() % 2 == 0) continue;
        int from = static_cast<int>(rng() % w.side);
        int len = 1 + static_cast<int>(rng() % w.side);
        for (int k = 0; k < len; ++k) s.push_back(row * w.side + (from + k) % w.side);
      }
      break;
    }
  }
  return sorted(s);
}

/// The row/column cut bound on one set.
inline bool row_cut_bound(const GadgetInstance& w, const VertexSet& s) {
  const int n = w.graph.vertex_count();
  int bound = std::min({w.side, row_column_weight(w, s),
                        row_column_weight(w, complement(n, s))});
  return cut_degree(w.graph, s) >= bound;
}

}  // namespace gadget_checks
