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

#include "tacorient/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <utility>

#include "flow.hpp"
#include "parallel.hpp"
#include "tacorient/error.hpp"

namespace tacorient {

namespace {

void check_terminals(int n, Vertex u, Vertex v) {
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw Error(ErrorKind::kInvalidArgument,
                "terminal out of range: (" + std::to_string(u) + ", " +
                    std::to_string(v) + ")");
  }
  if (u == v) {
    throw Error(ErrorKind::kInvalidArgument,
                "terminals must be distinct (both " + std::to_string(u) + ")");
  }
}

int flow_limit(int limit) {
  return limit < 0 ? std::numeric_limits<int>::max() : limit;
}

VertexSet side_from_mask(const std::vector<char>& mask, int n) {
  VertexSet side;
  for (Vertex v = 0; v < n; ++v) {
    if (mask[v]) side.push_back(v);
  }
  return side;
}

// Pair index k in [0, n(n-1)) -> ordered pair in lexicographic order.
std::pair<Vertex, Vertex> ordered_pair(std::int64_t k, int n) {
  auto u = static_cast<Vertex>(k / (n - 1));
  auto v = static_cast<Vertex>(k % (n - 1));
  if (v >= u) ++v;
  return {u, v};
}

}  // namespace

// ---- ArcConnectivity --------------------------------------------------------

ArcConnectivity::ArcConnectivity(const Digraph& d)
    : vertex_count_(d.vertex_count()),
      network_(std::make_unique<detail::FlowNetwork>(d.vertex_count())) {
  std::map<std::pair<Vertex, Vertex>, int> multiplicity;
  for (const Arc& a : d.arcs()) ++multiplicity[{a.tail, a.head}];
  for (const auto& [arc, count] : multiplicity) {
    network_->add_arc(arc.first, arc.second, count);
  }
}

ArcConnectivity::~ArcConnectivity() = default;
ArcConnectivity::ArcConnectivity(ArcConnectivity&&) noexcept = default;
ArcConnectivity& ArcConnectivity::operator=(ArcConnectivity&&) noexcept =
    default;

ArcConnectivity::ArcConnectivity(const ArcConnectivity& other)
    : vertex_count_(other.vertex_count_),
      network_(std::make_unique<detail::FlowNetwork>(*other.network_)) {}

ArcConnectivity& ArcConnectivity::operator=(const ArcConnectivity& other) {
  if (this != &other) {
    vertex_count_ = other.vertex_count_;
    network_ = std::make_unique<detail::FlowNetwork>(*other.network_);
  }
  return *this;
}

int ArcConnectivity::lambda(Vertex u, Vertex v, int limit) {
  check_terminals(vertex_count_, u, v);
  network_->reset();
  return network_->max_flow(u, v, flow_limit(limit));
}

CutWitness ArcConnectivity::witness(Vertex u, Vertex v) {
  check_terminals(vertex_count_, u, v);
  network_->reset();
  CutWitness w;
  w.value = network_->max_flow(u, v);
  w.side = side_from_mask(network_->reachable_from(u), vertex_count_);
  return w;
}

// ---- EdgeConnectivity -------------------------------------------------------

EdgeConnectivity::EdgeConnectivity(const Multigraph& g)
    : vertex_count_(g.vertex_count()),
      network_(std::make_unique<detail::FlowNetwork>(g.vertex_count())) {
  std::map<std::pair<Vertex, Vertex>, int> multiplicity;
  for (const Edge& e : g.edges()) {
    ++multiplicity[{std::min(e.u, e.v), std::max(e.u, e.v)}];
  }
  for (const auto& [pair, count] : multiplicity) {
    network_->add_arc(pair.first, pair.second, count);
    network_->add_arc(pair.second, pair.first, count);
  }
}

EdgeConnectivity::~EdgeConnectivity() = default;
EdgeConnectivity::EdgeConnectivity(EdgeConnectivity&&) noexcept = default;
EdgeConnectivity& EdgeConnectivity::operator=(EdgeConnectivity&&) noexcept =
    default;

EdgeConnectivity::EdgeConnectivity(const EdgeConnectivity& other)
    : vertex_count_(other.vertex_count_),
      network_(std::make_unique<detail::FlowNetwork>(*other.network_)) {}

EdgeConnectivity& EdgeConnectivity::operator=(const EdgeConnectivity& other) {
  if (this != &other) {
    vertex_count_ = other.vertex_count_;
    network_ = std::make_unique<detail::FlowNetwork>(*other.network_);
  }
  return *this;
}

int EdgeConnectivity::lambda(Vertex u, Vertex v, int limit) {
  check_terminals(vertex_count_, u, v);
  network_->reset();
  return network_->max_flow(u, v, flow_limit(limit));
}

CutWitness EdgeConnectivity::witness(Vertex u, Vertex v) {
  check_terminals(vertex_count_, u, v);
  network_->reset();
  CutWitness w;
  w.value = network_->max_flow(u, v);
  w.side = side_from_mask(network_->reachable_from(u), vertex_count_);
  return w;
}

CutWitness local_edge_connectivity(const Multigraph& g, Vertex u, Vertex v) {
  return EdgeConnectivity(g).witness(u, v);
}

CutWitness local_arc_connectivity(const Digraph& d, Vertex u, Vertex v) {
  return ArcConnectivity(d).witness(u, v);
}

// ---- all-pairs aggregates ---------------------------------------------------

std::vector<std::vector<int>> edge_connectivity_matrix(const Multigraph& g,
                                                       int threads) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> lambda(n, std::vector<int>(n, 0));
  if (n < 2) return lambda;
  const EdgeConnectivity prototype(g);
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1);
  detail::parallel_slices(pairs, threads, [&](int, std::int64_t begin,
                                              std::int64_t end) {
    EdgeConnectivity local = prototype;
    for (std::int64_t k = begin; k < end; ++k) {
      auto [u, v] = ordered_pair(k, n);
      if (u < v) lambda[u][v] = local.lambda(u, v);
    }
  });
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < u; ++v) lambda[u][v] = lambda[v][u];
  }
  return lambda;
}

std::vector<std::vector<int>> arc_connectivity_matrix(const Digraph& d,
                                                      int threads) {
  const int n = d.vertex_count();
  std::vector<std::vector<int>> lambda(n, std::vector<int>(n, 0));
  if (n < 2) return lambda;
  const ArcConnectivity prototype(d);
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1);
  detail::parallel_slices(pairs, threads, [&](int, std::int64_t begin,
                                              std::int64_t end) {
    ArcConnectivity local = prototype;
    for (std::int64_t k = begin; k < end; ++k) {
      auto [u, v] = ordered_pair(k, n);
      lambda[u][v] = local.lambda(u, v);
    }
  });
  return lambda;
}

std::int64_t total_arc_connectivity(const Digraph& d, int threads) {
  const int n = d.vertex_count();
  if (n < 2) return 0;
  const ArcConnectivity prototype(d);
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1);
  std::vector<std::int64_t> partial(std::max(threads, 1), 0);
  detail::parallel_slices(pairs, threads, [&](int worker, std::int64_t begin,
                                              std::int64_t end) {
    ArcConnectivity local = prototype;
    std::int64_t sum = 0;
    for (std::int64_t k = begin; k < end; ++k) {
      auto [u, v] = ordered_pair(k, n);
      sum += local.lambda(u, v);
    }
    partial[worker] = sum;
  });
  std::int64_t total = 0;
  for (std::int64_t s : partial) total += s;
  return total;
}

// ---- strong components and reachability -------------------------------------

StrongComponents strong_components(const Digraph& d) {
  const int n = d.vertex_count();
  StrongComponents result;
  result.component_of.assign(n, -1);
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> frames;
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      Vertex v = frames.back().first;
      std::size_t i = frames.back().second;
      auto outs = d.out_arcs(v);
      if (i < outs.size()) {
        ++frames.back().second;
        Vertex w = d.arc(outs[i]).head;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          result.component_of[w] = result.count;
        } while (w != v);
        ++result.count;
      }
      frames.pop_back();
      if (!frames.empty()) {
        Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return result;
}

bool is_strongly_connected(const Digraph& d) {
  return strong_components(d).count <= 1;
}

std::int64_t reach_count(const Digraph& d) {
  const int n = d.vertex_count();
  if (n == 0) return 0;
  StrongComponents scc = strong_components(d);
  const int c = scc.count;
  const int words = (c + 63) / 64;
  std::vector<std::int64_t> size(c, 0);
  for (Vertex v = 0; v < n; ++v) ++size[scc.component_of[v]];

  std::vector<std::vector<Vertex>> members(c);
  for (Vertex v = 0; v < n; ++v) members[scc.component_of[v]].push_back(v);

  // Successor components always have smaller ids, so ascending order is a
  // valid evaluation order.
  std::vector<std::vector<std::uint64_t>> reach(
      c, std::vector<std::uint64_t>(words, 0));
  std::int64_t total = 0;
  for (int comp = 0; comp < c; ++comp) {
    auto& bits = reach[comp];
    bits[comp / 64] |= std::uint64_t{1} << (comp % 64);
    for (Vertex v : members[comp]) {
      for (EdgeId a : d.out_arcs(v)) {
        int other = scc.component_of[d.arc(a).head];
        if (other == comp) continue;
        for (int w = 0; w < words; ++w) bits[w] |= reach[other][w];
      }
    }
    std::int64_t reached = 0;
    for (int w = 0; w < words; ++w) {
      std::uint64_t word = bits[w];
      while (word != 0) {
        int bit = __builtin_ctzll(word);
        reached += size[w * 64 + bit];
        word &= word - 1;
      }
    }
    total += size[comp] * reached;
  }
  return total - n;
}

// ---- 2-edge-connected decomposition -----------------------------------------

TwoEdgeConnectedComponents two_edge_connected_components(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<char> is_bridge(g.edge_count(), 0);
  std::vector<std::pair<Vertex, std::size_t>> frames;
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = counter++;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      Vertex v = frames.back().first;
      std::size_t i = frames.back().second;
      auto inc = g.incident(v);
      if (i < inc.size()) {
        ++frames.back().second;
        EdgeId e = inc[i];
        if (e == parent_edge[v]) continue;
        Vertex w = g.opposite(e, v);
        if (disc[w] == -1) {
          parent_edge[w] = e;
          disc[w] = low[w] = counter++;
          frames.emplace_back(w, 0);
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      frames.pop_back();
      if (parent_edge[v] != -1) {
        Vertex p = g.opposite(parent_edge[v], v);
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) is_bridge[parent_edge[v]] = 1;
      }
    }
  }

  TwoEdgeConnectedComponents result;
  result.class_of.assign(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (result.class_of[root] != -1) continue;
    int id = static_cast<int>(result.classes.size());
    VertexSet members{root};
    result.class_of[root] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      Vertex v = members[head];
      for (EdgeId e : g.incident(v)) {
        if (is_bridge[e]) continue;
        Vertex w = g.opposite(e, v);
        if (result.class_of[w] == -1) {
          result.class_of[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.classes.push_back(std::move(members));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_bridge[e]) result.bridges.push_back(e);
  }
  return result;
}

// ---- well-balancedness -------------------------------------------------------

std::optional<Vertex> find_apex(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  Vertex apex = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(apex)) apex = v;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v != apex && g.degree(v) >= g.degree(apex)) return std::nullopt;
  }
  EdgeConnectivity ec(g);
  for (Vertex v = 0; v < n; ++v) {
    if (v == apex) continue;
    if (ec.lambda(apex, v) != g.degree(v)) return std::nullopt;
  }
  return apex;
}

WellBalancedVerifier::WellBalancedVerifier(const Multigraph& g)
    : WellBalancedVerifier(g, Options{}) {}

WellBalancedVerifier::WellBalancedVerifier(const Multigraph& g,
                                           Options options)
    : graph_(g), options_(options) {
  if (options_.apex_fast_path) apex_ = find_apex(g);
  if (apex_) {
    // λ_G(a, v) = d(v) by definition of the apex.
    const int n = g.vertex_count();
    lambda_.assign(n, std::vector<int>(n, 0));
    for (Vertex v = 0; v < n; ++v) {
      if (v == *apex_) continue;
      lambda_[*apex_][v] = lambda_[v][*apex_] = g.degree(v);
    }
  } else {
    lambda_ = edge_connectivity_matrix(g, options_.threads);
  }
}

WellBalancedReport WellBalancedVerifier::check(const Orientation& o) const {
  const int n = graph_.vertex_count();
  const Digraph d = orient(graph_, o);
  const ArcConnectivity prototype(d);

  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (apex_) {
    for (Vertex v = 0; v < n; ++v) {
      if (v != *apex_) pairs.emplace_back(std::min(v, *apex_), std::max(v, *apex_));
    }
  } else {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
  }

  const int workers = std::max(options_.threads, 1);
  std::vector<std::optional<WellBalancedViolation>> found(workers);
  detail::parallel_slices(
      static_cast<std::int64_t>(pairs.size()), workers,
      [&](int worker, std::int64_t begin, std::int64_t end) {
        ArcConnectivity ac = prototype;
        for (std::int64_t k = begin; k < end; ++k) {
          auto [u, v] = pairs[k];
          const int need = lambda_[u][v] / 2;
          if (need == 0) continue;
          if (ac.lambda(u, v, need) >= need && ac.lambda(v, u, need) >= need) {
            continue;
          }
          found[worker] = WellBalancedViolation{u, v, lambda_[u][v],
                                                ac.lambda(u, v), ac.lambda(v, u)};
          return;
        }
      });
  for (auto& f : found) {
    if (f) return {false, f};
  }
  return {true, std::nullopt};
}

WellBalancedReport is_well_balanced(const Multigraph& g, const Orientation& o) {
  return WellBalancedVerifier(g).check(o);
}

}  // namespace tacorient
