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

// Blocking-flow (Dinic) max-flow on small integer capacities. The network is
// built once and can be solved repeatedly for different terminals; reset()
// restores the original capacities.

#pragma once

#include <algorithm>
#include <limits>
#include <vector>

namespace tacorient::detail {

class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count)
      : adj_(node_count), level_(node_count), next_(node_count) {}

  /// Returns the index of the forward arc; its residual twin is index ^ 1.
  int add_arc(int from, int to, int capacity) {
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, capacity, capacity});
    arcs_.push_back({from, 0, 0});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  [[nodiscard]] int node_count() const noexcept {
    return static_cast<int>(adj_.size());
  }

  void reset() {
    for (auto& a : arcs_) a.residual = a.capacity;
  }

  /// Pushes flow from source to sink until none is left or `limit` is
  /// reached. Starts from the current residual state.
  int max_flow(int source, int sink,
               int limit = std::numeric_limits<int>::max()) {
    int total = 0;
    while (total < limit && build_levels(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      total += blocking_flow(source, sink, limit - total);
    }
    return total;
  }

  /// Nodes reachable from `source` in the residual network.
  [[nodiscard]] std::vector<char> reachable_from(int source) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<int> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : adj_[v]) {
        const auto& a = arcs_[id];
        if (a.residual > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

  /// Flow currently carried by the forward arc `id`.
  [[nodiscard]] int flow(int id) const {
    return arcs_[id].capacity - arcs_[id].residual;
  }

 private:
  struct ArcRecord {
    int to;
    int capacity;
    int residual;
  };

  bool build_levels(int source, int sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<int> queue{source};
    level_[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int id : adj_[v]) {
        const auto& a = arcs_[id];
        if (a.residual > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // Iterative augmenting-path search over the level graph.
  int blocking_flow(int source, int sink, int limit) {
    int pushed = 0;
    std::vector<int> path;
    int v = source;
    while (pushed < limit) {
      if (v == sink) {
        int bottleneck = limit - pushed;
        for (int id : path) bottleneck = std::min(bottleneck, arcs_[id].residual);
        for (int id : path) {
          arcs_[id].residual -= bottleneck;
          arcs_[id ^ 1].residual += bottleneck;
        }
        pushed += bottleneck;
        path.clear();
        v = source;
        continue;
      }
      bool advanced = false;
      for (int& i = next_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
        int id = adj_[v][i];
        const auto& a = arcs_[id];
        if (a.residual > 0 && level_[a.to] == level_[v] + 1) {
          path.push_back(id);
          v = a.to;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      level_[v] = -1;  // dead end for this phase
      if (path.empty()) break;
      int id = path.back();
      path.pop_back();
      v = arcs_[id ^ 1].to;
      ++next_[v];
    }
    return pushed;
  }

  std::vector<ArcRecord> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace tacorient::detail
