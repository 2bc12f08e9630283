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

#include "tacorient/wb_orient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "flow.hpp"
#include "tacorient/connectivity.hpp"
#include "tacorient/error.hpp"

namespace tacorient {

Orientation eulerian_orientation(const Multigraph& g) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) % 2 != 0) {
      throw Error(ErrorKind::kDomain,
                  "odd degree at vertex " + std::to_string(v));
    }
  }
  // Hierholzer walk: every greedy walk closes at its start, so orienting
  // edges in traversal order balances every vertex.
  std::vector<Vertex> heads(g.edge_count(), -1);
  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      auto inc = g.incident(v);
      std::size_t& i = next[v];
      while (i < inc.size() && used[inc[i]]) ++i;
      if (i == inc.size()) {
        stack.pop_back();
        continue;
      }
      EdgeId e = inc[i];
      used[e] = 1;
      Vertex w = g.opposite(e, v);
      heads[e] = w;
      stack.push_back(w);
    }
  }
  return Orientation(std::move(heads));
}

OutdegreeResult orient_with_outdegrees(const Multigraph& g,
                                       std::span<const int> out_degree) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (static_cast<int>(out_degree.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected one out-degree per vertex");
  }
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (out_degree[v] < 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "negative out-degree at vertex " + std::to_string(v));
    }
    total += out_degree[v];
  }
  if (total != m) {
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    return OutdegreeInfeasibility{
        OutdegreeInfeasibility::Reason::kEdgeCountMismatch, std::move(all), m,
        total};
  }

  // Nodes: source, edges, vertices, sink. An edge sending its unit of flow to
  // endpoint x makes x its tail.
  const int source = 0;
  const int edge_base = 1;
  const int vertex_base = 1 + m;
  const int sink = 1 + m + n;
  detail::FlowNetwork net(sink + 1);
  std::vector<std::pair<int, int>> choice(m);
  for (EdgeId e = 0; e < m; ++e) {
    net.add_arc(source, edge_base + e, 1);
    const Edge& ed = g.edge(e);
    choice[e] = {net.add_arc(edge_base + e, vertex_base + ed.u, 1),
                 net.add_arc(edge_base + e, vertex_base + ed.v, 1)};
  }
  for (Vertex v = 0; v < n; ++v) {
    if (out_degree[v] > 0) net.add_arc(vertex_base + v, sink, out_degree[v]);
  }

  if (net.max_flow(source, sink) == m) {
    std::vector<Vertex> heads(m);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      heads[e] = net.flow(choice[e].first) == 1 ? ed.v : ed.u;
    }
    return Orientation(std::move(heads));
  }

  // Vertices on the source side of a minimum cut span more edges than their
  // combined budget.
  auto reach = net.reachable_from(source);
  VertexSet witness;
  std::int64_t budget = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (reach[vertex_base + v]) {
      witness.push_back(v);
      budget += out_degree[v];
    }
  }
  std::int64_t spanned = induced_edge_count(g, witness);
  if (spanned <= budget) {
    throw Error(ErrorKind::kInternal, "min-cut witness is not dense");
  }
  return OutdegreeInfeasibility{OutdegreeInfeasibility::Reason::kDenseSet,
                                std::move(witness), spanned, budget};
}

namespace {

/// Calls visit(pairing) for every perfect pairing of `items` in lexicographic
/// backtracking order until it returns true.
bool for_each_pairing(std::vector<Vertex>& items,
                      std::vector<std::pair<Vertex, Vertex>>& pairing,
                      const std::function<bool(
                          const std::vector<std::pair<Vertex, Vertex>>&)>& visit) {
  if (items.empty()) return visit(pairing);
  Vertex first = items.front();
  for (std::size_t j = 1; j < items.size(); ++j) {
    Vertex partner = items[j];
    std::vector<Vertex> rest;
    rest.reserve(items.size() - 2);
    for (std::size_t k = 1; k < items.size(); ++k) {
      if (k != j) rest.push_back(items[k]);
    }
    pairing.emplace_back(first, partner);
    if (for_each_pairing(rest, pairing, visit)) return true;
    pairing.pop_back();
  }
  return false;
}

Orientation orient_connected(const Multigraph& g,
                             const WellBalancedOptions& options) {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) % 2 != 0) odd.push_back(v);
  }
  if (static_cast<int>(odd.size()) > options.max_odd_vertices) {
    throw Error(ErrorKind::kCapacity,
                "component has " + std::to_string(odd.size()) +
                    " odd-degree vertices, more than the configured cap of " +
                    std::to_string(options.max_odd_vertices));
  }
  WellBalancedVerifier verifier(g, {.apex_fast_path = false,
                                    .threads = options.threads});
  std::optional<Orientation> result;
  std::vector<std::pair<Vertex, Vertex>> pairing;
  for_each_pairing(odd, pairing, [&](const auto& pairs) {
    Multigraph augmented = g;
    for (auto [a, b] : pairs) augmented.add_edge(a, b);
    Orientation full = eulerian_orientation(augmented);
    std::vector<Vertex> heads(full.heads().begin(),
                              full.heads().begin() + g.edge_count());
    Orientation candidate(std::move(heads));
    if (!verifier.check(candidate).well_balanced) return false;
    result = std::move(candidate);
    return true;
  });
  if (!result) {
    throw Error(ErrorKind::kInternal,
                "no odd-vertex pairing produced a well-balanced orientation");
  }
  return *result;
}

}  // namespace

Orientation well_balanced_orientation(const Multigraph& g,
                                      const WellBalancedOptions& options) {
  const int n = g.vertex_count();
  std::vector<int> component(n, -1);
  std::vector<Vertex> heads(g.edge_count(), -1);
  for (Vertex root = 0; root < n; ++root) {
    if (component[root] != -1) continue;
    VertexSet members{root};
    component[root] = root;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (EdgeId e : g.incident(members[i])) {
        Vertex w = g.opposite(e, members[i]);
        if (component[w] == -1) {
          component[w] = root;
          members.push_back(w);
        }
      }
    }
    if (members.size() == 1) continue;
    std::sort(members.begin(), members.end());
    InducedSubgraph sub = induced_subgraph(g, members);
    Orientation local = orient_connected(sub.graph, options);
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
      heads[sub.parent_edge[e]] = sub.parent_vertex[local.head(e)];
    }
  }
  // Each component was certified on its own; pairs in different components
  // have λ_G = 0.
  return Orientation(std::move(heads));
}

}  // namespace tacorient
