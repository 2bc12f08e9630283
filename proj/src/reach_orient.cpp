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

#include "tacorient/reach_orient.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tacorient/connectivity.hpp"
#include "tacorient/error.hpp"

namespace tacorient {

Orientation robbins_orientation(const Multigraph& g) {
  const int n = g.vertex_count();
  TwoEdgeConnectedComponents tec = two_edge_connected_components(g);
  if (!tec.bridges.empty()) {
    EdgeId b = tec.bridges.front();
    throw Error(ErrorKind::kDomain,
                "graph has a bridge: edge " + std::to_string(b) + " {" +
                    std::to_string(g.edge(b).u) + "," +
                    std::to_string(g.edge(b).v) + "}");
  }
  if (tec.classes.size() > 1) {
    throw Error(ErrorKind::kDomain,
                "graph is disconnected: vertex " +
                    std::to_string(tec.classes[1].front()) +
                    " is unreachable from vertex 0");
  }

  std::vector<int> disc(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<std::pair<Vertex, std::size_t>> frames;
  int counter = 0;
  if (n > 0) {
    disc[0] = counter++;
    frames.emplace_back(0, 0);
  }
  while (!frames.empty()) {
    auto& [v, i] = frames.back();
    auto inc = g.incident(v);
    if (i == inc.size()) {
      frames.pop_back();
      continue;
    }
    EdgeId e = inc[i++];
    Vertex w = g.opposite(e, v);
    if (disc[w] == -1) {
      disc[w] = counter++;
      parent_edge[w] = e;
      frames.emplace_back(w, 0);
    }
  }

  std::vector<Vertex> heads(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Vertex x = g.edge(e).u;
    Vertex y = g.edge(e).v;
    if (disc[x] > disc[y]) std::swap(x, y);  // x is the ancestor
    heads[e] = parent_edge[y] == e ? y : x;
  }
  return Orientation(std::move(heads));
}

namespace {

struct DpState {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t value = 0;
  int prev = -1;         // index in the previous table of the same node
  int child_state = -1;  // index in the merged child's final table
  bool down = false;     // edge points parent -> child
};

using Table = std::vector<DpState>;

// Max-Fenwick over b for the dominance sweep.
class SuffixMax {
 public:
  explicit SuffixMax(std::size_t size) : tree_(size + 1, -1) {}
  // Stored reversed so that a prefix query answers "b' >= b".
  void update(std::size_t pos, std::int64_t value) {
    for (std::size_t i = tree_.size() - 1 - pos; i < tree_.size(); i += i & -i) {
      tree_[i] = std::max(tree_[i], value);
    }
  }
  std::int64_t query(std::size_t pos) const {
    std::int64_t best = -1;
    for (std::size_t i = tree_.size() - 1 - pos; i > 0; i -= i & -i) {
      best = std::max(best, tree_[i]);
    }
    return best;
  }

 private:
  std::vector<std::int64_t> tree_;
};

/// Drops states dominated by another state with a' >= a, b' >= b and
/// value' >= value. Keys (a, b) are unique on input. The result is sorted by
/// (a, b).
Table prune(const std::map<std::pair<std::int64_t, std::int64_t>, DpState>& best,
            std::int64_t max_b) {
  Table states;
  states.reserve(best.size());
  for (const auto& [key, s] : best) states.push_back(s);
  std::vector<int> order(states.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (states[x].a != states[y].a) return states[x].a > states[y].a;
    return states[x].b > states[y].b;
  });
  SuffixMax seen(static_cast<std::size_t>(max_b) + 1);
  std::vector<char> keep(states.size(), 0);
  for (int idx : order) {
    const DpState& s = states[idx];
    if (seen.query(s.b) >= s.value) continue;
    keep[idx] = 1;
    seen.update(s.b, s.value);
  }
  Table out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (keep[i]) out.push_back(states[i]);
  }
  return out;
}

}  // namespace

TreeReachResult tree_reach_dp(const WeightedForest& forest) {
  const int nodes = forest.node_count();
  for (int x = 0; x < nodes; ++x) {
    if (forest.node_weights[x] <= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "node weights must be positive (node " + std::to_string(x) +
                      ")");
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adj(nodes);  // (node, edge)
  {
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t k = 0; k < forest.edges.size(); ++k) {
      const auto& fe = forest.edges[k];
      if (fe.a < 0 || fe.a >= nodes || fe.b < 0 || fe.b >= nodes) {
        throw Error(ErrorKind::kInvalidArgument, "forest edge out of range");
      }
      int ra = find(fe.a);
      int rb = find(fe.b);
      if (ra == rb) {
        throw Error(ErrorKind::kDomain,
                    "forest edge " + std::to_string(k) + " closes a cycle");
      }
      parent[ra] = rb;
      adj[fe.a].emplace_back(fe.b, static_cast<int>(k));
      adj[fe.b].emplace_back(fe.a, static_cast<int>(k));
    }
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  // Root every tree at its smallest node; BFS order lists parents first.
  std::vector<int> parent_node(nodes, -1);
  std::vector<int> parent_edge(nodes, -1);
  std::vector<char> visited(nodes, 0);
  std::vector<int> order;
  std::vector<int> roots;
  for (int root = 0; root < nodes; ++root) {
    if (visited[root]) continue;
    roots.push_back(root);
    visited[root] = 1;
    std::size_t start = order.size();
    order.push_back(root);
    for (std::size_t i = start; i < order.size(); ++i) {
      int x = order[i];
      for (auto [y, k] : adj[x]) {
        if (visited[y]) continue;
        visited[y] = 1;
        parent_node[y] = x;
        parent_edge[y] = k;
        order.push_back(y);
      }
    }
  }

  std::vector<std::vector<int>> children(nodes);
  for (int x : order) {
    if (parent_node[x] != -1) children[parent_node[x]].push_back(x);
  }
  for (auto& c : children) std::sort(c.begin(), c.end());

  std::vector<std::int64_t> subtree_weight(nodes, 0);
  // tables[x][i] is the table after merging the first i children of x.
  std::vector<std::vector<Table>> tables(nodes);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    const std::int64_t w = forest.node_weights[x];
    subtree_weight[x] = w;
    tables[x].push_back(Table{DpState{w, w, 0, -1, -1, false}});
    for (int c : children[x]) {
      subtree_weight[x] += subtree_weight[c];
      const Table& current = tables[x].back();
      const Table& child = tables[c].back();
      std::map<std::pair<std::int64_t, std::int64_t>, DpState> best;
      auto offer = [&](DpState s) {
        auto [pos, inserted] = best.try_emplace({s.a, s.b}, s);
        if (!inserted && s.value > pos->second.value) pos->second = s;
      };
      for (int i = 0; i < static_cast<int>(current.size()); ++i) {
        const DpState& p = current[i];
        for (int j = 0; j < static_cast<int>(child.size()); ++j) {
          const DpState& q = child[j];
          offer({p.a, p.b + q.b, p.value + q.value + p.a * q.b, i, j, true});
          offer({p.a + q.a, p.b, p.value + q.value + q.a * p.b, i, j, false});
        }
      }
      tables[x].push_back(prune(best, subtree_weight[x]));
    }
  }

  TreeReachResult result;
  result.head_node.assign(forest.edges.size(), -1);
  std::vector<int> chosen(nodes, -1);  // final-table state index per node
  for (int root : roots) {
    const Table& final_table = tables[root].back();
    int best = 0;
    for (int i = 1; i < static_cast<int>(final_table.size()); ++i) {
      const DpState& s = final_table[i];
      const DpState& t = final_table[best];
      if (s.value > t.value ||
          (s.value == t.value && std::pair(s.a, s.b) < std::pair(t.a, t.b))) {
        best = i;
      }
    }
    chosen[root] = best;
    result.value += final_table[best].value;
  }
  for (int x : order) {
    int idx = chosen[x];
    for (int i = static_cast<int>(children[x].size()); i >= 1; --i) {
      const DpState& s = tables[x][i][idx];
      int c = children[x][i - 1];
      chosen[c] = s.child_state;
      result.head_node[parent_edge[c]] = s.down ? c : x;
      idx = s.prev;
    }
  }
  return result;
}

Orientation max_reach_orientation(const Multigraph& g) {
  TwoEdgeConnectedComponents tec = two_edge_connected_components(g);
  std::vector<Vertex> heads(g.edge_count(), -1);
  for (const VertexSet& cls : tec.classes) {
    if (cls.size() < 2) continue;
    InducedSubgraph sub = induced_subgraph(g, cls);
    Orientation local = robbins_orientation(sub.graph);
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
      heads[sub.parent_edge[e]] = sub.parent_vertex[local.head(e)];
    }
  }
  WeightedForest forest = condense(g, tec.classes);
  TreeReachResult dp = tree_reach_dp(forest);
  for (std::size_t k = 0; k < forest.edges.size(); ++k) {
    const auto& fe = forest.edges[k];
    const Edge& e = g.edge(fe.edge);
    heads[fe.edge] = forest.class_of[e.u] == dp.head_node[k] ? e.u : e.v;
  }
  return Orientation(std::move(heads));
}

}  // namespace tacorient
