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

// Slow reference implementations. None of them calls into the flow or
// decomposition code under test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "tacorient/multigraph.hpp"

namespace oracle {

using tacorient::Digraph;
using tacorient::Edge;
using tacorient::Multigraph;
using tacorient::Orientation;
using tacorient::Vertex;

/// Orientation for a counter value: edge 0 is the most significant bit and a
/// 1 bit points the edge at its larger endpoint.
inline Orientation orientation_of(const Multigraph& g, std::uint64_t mask) {
  const int m = g.edge_count();
  std::vector<Vertex> heads(m);
  for (int e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    bool upper = (mask >> (m - 1 - e)) & 1U;
    heads[e] = upper ? std::max(ed.u, ed.v) : std::min(ed.u, ed.v);
  }
  return Orientation(std::move(heads));
}

inline Digraph to_digraph(const Multigraph& g, const Orientation& o) {
  Digraph d(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    Vertex h = o.head(e);
    d.add_arc(h == ed.u ? ed.v : ed.u, h);
  }
  return d;
}

/// Undirected cut sizes for every vertex subset (bit v = vertex v).
inline std::vector<int> all_cuts(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> cut(std::size_t{1} << n, 0);
  for (std::uint32_t s = 0; s < cut.size(); ++s) {
    for (const Edge& e : g.edges()) {
      cut[s] += ((s >> e.u) & 1U) != ((s >> e.v) & 1U);
    }
  }
  return cut;
}

/// Out-degree of every vertex subset.
inline std::vector<int> all_out_cuts(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<int> cut(std::size_t{1} << n, 0);
  for (std::uint32_t s = 0; s < cut.size(); ++s) {
    for (const auto& a : d.arcs()) {
      cut[s] += ((s >> a.tail) & 1U) && !((s >> a.head) & 1U);
    }
  }
  return cut;
}

/// min over u-v̄-sets of the table entry.
inline int min_cut(const std::vector<int>& cut, Vertex u, Vertex v) {
  int best = std::numeric_limits<int>::max();
  for (std::uint32_t s = 0; s < cut.size(); ++s) {
    if (((s >> u) & 1U) && !((s >> v) & 1U)) best = std::min(best, cut[s]);
  }
  return best;
}

inline int lambda_graph(const Multigraph& g, Vertex u, Vertex v) {
  return min_cut(all_cuts(g), u, v);
}

inline int lambda_digraph(const Digraph& d, Vertex u, Vertex v) {
  return min_cut(all_out_cuts(d), u, v);
}

inline std::vector<std::vector<int>> lambda_matrix(const Digraph& d) {
  const int n = d.vertex_count();
  auto cut = all_out_cuts(d);
  std::vector<std::vector<int>> lam(n, std::vector<int>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) lam[u][v] = min_cut(cut, u, v);
    }
  }
  return lam;
}

inline std::int64_t tac(const Digraph& d) {
  std::int64_t sum = 0;
  for (const auto& row : lambda_matrix(d)) {
    for (int x : row) sum += x;
  }
  return sum;
}

/// Reachability rows by plain BFS; reach[u][v] for u != v.
inline std::vector<std::vector<char>> reachability(const Digraph& d) {
  const int n = d.vertex_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> queue{s};
    reach[s][s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (int a : d.out_arcs(queue[i])) {
        Vertex h = d.arc(a).head;
        if (!reach[s][h]) {
          reach[s][h] = 1;
          queue.push_back(h);
        }
      }
    }
  }
  return reach;
}

inline std::int64_t reach_count(const Digraph& d) {
  auto reach = reachability(d);
  std::int64_t count = 0;
  for (Vertex u = 0; u < d.vertex_count(); ++u) {
    for (Vertex v = 0; v < d.vertex_count(); ++v) count += u != v && reach[u][v];
  }
  return count;
}

inline bool strongly_connected(const Digraph& d) {
  auto reach = reachability(d);
  for (const auto& row : reach) {
    for (char c : row) {
      if (!c) return false;
    }
  }
  return true;
}

inline std::int64_t max_reach(const Multigraph& g) {
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count());
       ++mask) {
    best = std::max(best, oracle::reach_count(to_digraph(g, orientation_of(g, mask))));
  }
  return best;
}

struct ExactTac {
  std::int64_t value = -1;
  std::uint64_t first_mask = 0;
  std::vector<std::uint64_t> maximizers;
};

inline ExactTac max_tac(const Multigraph& g) {
  ExactTac out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count());
       ++mask) {
    std::int64_t value = tac(to_digraph(g, orientation_of(g, mask)));
    if (value > out.value) {
      out.value = value;
      out.first_mask = mask;
      out.maximizers.clear();
    }
    if (value == out.value) out.maximizers.push_back(mask);
  }
  return out;
}

inline bool well_balanced(const Multigraph& g, const Orientation& o) {
  auto gcut = all_cuts(g);
  auto lam = lambda_matrix(to_digraph(g, o));
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (u != v && lam[u][v] < min_cut(gcut, u, v) / 2) return false;
    }
  }
  return true;
}

inline bool outdegrees_feasible(const Multigraph& g,
                                const std::vector<int>& out_degree) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count());
       ++mask) {
    Digraph d = to_digraph(g, orientation_of(g, mask));
    bool ok = true;
    for (Vertex v = 0; v < g.vertex_count() && ok; ++v) {
      ok = d.out_degree(v) == out_degree[v];
    }
    if (ok) return true;
  }
  return false;
}

/// Weighted reach count of a forest orientation, heads given per edge.
inline std::int64_t forest_reach(const std::vector<int>& weights,
                                 const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<int>& head) {
  Digraph d(static_cast<int>(weights.size()));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [a, b] = edges[k];
    d.add_arc(head[k] == a ? b : a, head[k]);
  }
  auto reach = reachability(d);
  std::int64_t sum = 0;
  for (std::size_t x = 0; x < weights.size(); ++x) {
    for (std::size_t y = 0; y < weights.size(); ++y) {
      if (x != y && reach[x][y]) sum += std::int64_t{weights[x]} * weights[y];
    }
  }
  return sum;
}

inline std::int64_t max_forest_reach(
    const std::vector<int>& weights,
    const std::vector<std::pair<int, int>>& edges) {
  std::int64_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size());
       ++mask) {
    std::vector<int> head(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
      head[k] = (mask >> k) & 1U ? edges[k].second : edges[k].first;
    }
    best = std::max(best, forest_reach(weights, edges, head));
  }
  return best;
}

/// Visits connected multigraphs with exactly n vertices and m edges so that
/// every isomorphism class appears at least once. Vertices are in BFS
/// discovery order: the tree parents form a non-decreasing sequence with
/// parent(i) < i, and the remaining m - n + 1 edges are any multiset of
/// vertex pairs.
inline void for_each_connected(int n, int m,
                               const std::function<void(const Multigraph&)>& visit) {
  if (n < 1 || m < n - 1) return;
  if (n == 1) {
    if (m == 0) visit(Multigraph(1));
    return;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const int extras = m - (n - 1);
  std::vector<int> parent(n, 0);
  std::vector<int> extra(extras, 0);
  std::function<void(int)> choose_extra;
  std::function<void(int)> choose_parent = [&](int i) {
    if (i == n) {
      choose_extra(0);
      return;
    }
    int lo = i == 1 ? 0 : parent[i - 1];
    for (int p = lo; p < i; ++p) {
      parent[i] = p;
      choose_parent(i + 1);
    }
  };
  choose_extra = [&](int j) {
    if (j == extras) {
      Multigraph g(n);
      for (int i = 1; i < n; ++i) g.add_edge(parent[i], i);
      for (int k : extra) g.add_edge(pairs[k].first, pairs[k].second);
      visit(g);
      return;
    }
    int lo = j == 0 ? 0 : extra[j - 1];
    for (int k = lo; k < static_cast<int>(pairs.size()); ++k) {
      extra[j] = k;
      choose_extra(j + 1);
    }
  };
  choose_parent(1);
}

/// Random multigraph with a fixed spanning path so that it is connected.
inline Multigraph random_connected(int n, int m, std::mt19937_64& rng) {
  Multigraph g(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n && g.edge_count() < m; ++i) {
    g.add_edge(order[i - 1], order[i]);
  }
  while (g.edge_count() < m) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

/// 2-edge-connected multigraph: a Hamiltonian cycle plus random chords.
inline Multigraph random_two_edge_connected(int n, int m, std::mt19937_64& rng) {
  Multigraph g(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  if (n == 2) {
    g.add_edge(0, 1);
    g.add_edge(0, 1);
  } else {
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);
  }
  while (g.edge_count() < m) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace oracle
