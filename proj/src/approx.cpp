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

#include "tacorient/approx.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "parallel.hpp"
#include "tacorient/connectivity.hpp"
#include "tacorient/error.hpp"
#include "tacorient/reach_orient.hpp"

namespace tacorient {

Orientation approx_tac_orientation(const Multigraph& g,
                                   const WellBalancedOptions& options) {
  Orientation result = max_reach_orientation(g);
  TwoEdgeConnectedComponents tec = two_edge_connected_components(g);
  for (const VertexSet& cls : tec.classes) {
    if (cls.size() < 2) continue;
    InducedSubgraph sub = induced_subgraph(g, cls);
    Orientation local = well_balanced_orientation(sub.graph, options);
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
      result.set_head(sub.parent_edge[e], sub.parent_vertex[local.head(e)]);
    }
  }
  return result;
}

Orientation orientation_from_mask(const Multigraph& g, std::uint64_t mask) {
  const int m = g.edge_count();
  std::vector<Vertex> heads(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    bool upper = (mask >> (m - 1 - e)) & 1U;
    heads[e] = upper ? std::max(ed.u, ed.v) : std::min(ed.u, ed.v);
  }
  return Orientation(std::move(heads));
}

namespace {

void check_cap(const Multigraph& g, const BruteForceOptions& options) {
  if (g.edge_count() > options.max_edges || g.edge_count() > 62) {
    throw Error(ErrorKind::kCapacity,
                "graph has " + std::to_string(g.edge_count()) +
                    " edges, more than the brute-force cap of " +
                    std::to_string(options.max_edges));
  }
}

std::int64_t tac_of(const Multigraph& g, std::uint64_t mask) {
  return total_arc_connectivity(orient(g, orientation_from_mask(g, mask)));
}

}  // namespace

ExactResult brute_force_max_tac(const Multigraph& g,
                                const BruteForceOptions& options) {
  check_cap(g, options);
  const std::int64_t count = std::int64_t{1} << g.edge_count();
  struct Best {
    std::int64_t value = -1;
    std::uint64_t mask = 0;
  };
  std::vector<Best> best(std::max(1, options.threads));
  detail::parallel_slices(
      count, options.threads,
      [&](int worker, std::int64_t begin, std::int64_t end) {
        Best& local = best[worker];
        for (std::int64_t mask = begin; mask < end; ++mask) {
          std::int64_t value = tac_of(g, static_cast<std::uint64_t>(mask));
          if (value > local.value) local = {value, static_cast<std::uint64_t>(mask)};
        }
      });
  // Slices are contiguous and ascending, so a strict improvement keeps the
  // smallest maximizing mask.
  Best overall;
  for (const Best& b : best) {
    if (b.value > overall.value) overall = b;
  }
  return {orientation_from_mask(g, overall.mask), overall.value};
}

bool oco_decide(const Multigraph& g, std::int64_t k,
                const BruteForceOptions& options) {
  check_cap(g, options);
  if (k <= 0) return true;
  const std::int64_t count = std::int64_t{1} << g.edge_count();
  std::atomic<bool> found{false};
  detail::parallel_slices(
      count, options.threads,
      [&](int, std::int64_t begin, std::int64_t end) {
        for (std::int64_t mask = begin; mask < end && !found.load(); ++mask) {
          if (tac_of(g, static_cast<std::uint64_t>(mask)) >= k) found = true;
        }
      });
  return found.load();
}

}  // namespace tacorient
