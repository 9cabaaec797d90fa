// Copyright 2026 The vcpmas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact minimum vertex cover and maximum matching on edge-induced subgraphs.

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "vcpmas/errors.hpp"
#include "vcpmas/graph.hpp"

namespace vcpmas {
namespace {

using VMask = std::uint32_t;

// Minimum vertex cover on at most 32 vertices given as adjacency masks.
class CoverSolver {
 public:
  explicit CoverSolver(std::vector<VMask> adj) : adj_(std::move(adj)) {}

  int solve(VMask alive) {
    alive = drop_isolated(alive);
    if (alive == 0) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;

    int best = 0;
    VMask pick = 0;
    int pick_deg = -1;
    VMask leaf = 0;
    for (VMask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      const int d = __builtin_popcount(adj_[v] & alive);
      if (d == 1 && leaf == 0) leaf = VMask{1} << v;
      if (d > pick_deg) {
        pick_deg = d;
        pick = VMask{1} << v;
      }
    }
    if (leaf != 0) {
      // Some minimum cover takes the neighbour of a degree-one vertex.
      const VMask nb = adj_[__builtin_ctz(leaf)] & alive;
      best = 1 + solve(alive & ~nb & ~leaf);
    } else {
      const int v = __builtin_ctz(pick);
      const VMask nb = adj_[v] & alive;
      const int take = 1 + solve(alive & ~pick);
      const int skip = __builtin_popcount(nb) + solve(alive & ~nb & ~pick);
      best = std::min(take, skip);
    }
    memo_.emplace(alive, best);
    return best;
  }

  int degree(int v, VMask alive) const {
    return __builtin_popcount(adj_[v] & alive);
  }
  VMask neighbours(int v, VMask alive) const { return adj_[v] & alive; }

 private:
  VMask drop_isolated(VMask alive) const {
    VMask out = 0;
    for (VMask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = __builtin_ctz(rest);
      if ((adj_[v] & alive) != 0) out |= VMask{1} << v;
    }
    return out;
  }

  std::vector<VMask> adj_;
  std::unordered_map<VMask, int> memo_;
};

struct ComponentShape {
  bool small_tree = false;
  std::size_t diameter = 0;
};

ComponentShape shape_of(const Graph& g, const Coalition& comp) {
  ComponentShape shape;
  if (!is_tree(g, comp)) return shape;
  shape.diameter = diameter(g, comp);
  shape.small_tree = shape.diameter <= 3;
  return shape;
}

bool lex_less(const Graph& g, const std::vector<VertexId>& a,
              const std::vector<VertexId>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](VertexId x, VertexId y) { return g.rank(x) < g.rank(y); });
}

// Lexicographically smallest minimum cover of a tree with diameter <= 3.
std::vector<VertexId> small_tree_cover(const Graph& g, const Coalition& comp,
                                       std::size_t diam) {
  const SubgraphView view(g, comp);
  if (diam == 1) return {view.vertices().front()};
  std::vector<VertexId> inner;
  for (VertexId v : view.vertices()) {
    if (view.degree(v) >= 2) inner.push_back(v);
  }
  if (diam == 2) return inner;
  // Pisces: any 2-cover contains a base; the other vertex is the other base
  // or that base's sole pendant neighbour.
  std::vector<VertexId> candidates = inner;
  for (VertexId b : inner) {
    const auto inc = view.incident_edges(b);
    std::vector<VertexId> leaves;
    for (EdgeId e : inc) {
      const VertexId w = g.other_end(e, b);
      if (view.degree(w) == 1) leaves.push_back(w);
    }
    if (leaves.size() == 1) candidates.push_back(leaves.front());
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](VertexId x, VertexId y) { return g.rank(x) < g.rank(y); });
  std::vector<VertexId> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      bool covers = true;
      comp.for_each([&](EdgeId e) {
        if (!g.incident(e, candidates[i]) && !g.incident(e, candidates[j])) {
          covers = false;
        }
      });
      std::vector<VertexId> pair{candidates[i], candidates[j]};
      if (covers && (best.empty() || lex_less(g, pair, best))) best = pair;
    }
  }
  return best;
}

struct LocalGraph {
  std::vector<VertexId> vertices;  // label order
  std::vector<VMask> adj;
};

LocalGraph localize(const Graph& g, const Coalition& comp) {
  LocalGraph local;
  local.vertices = SubgraphView(g, comp).vertices();
  std::unordered_map<VertexId, int> pos;
  for (std::size_t k = 0; k < local.vertices.size(); ++k) {
    pos[local.vertices[k]] = static_cast<int>(k);
  }
  local.adj.assign(local.vertices.size(), 0);
  comp.for_each([&](EdgeId e) {
    const int a = pos.at(g.endpoints(e).first);
    const int b = pos.at(g.endpoints(e).second);
    local.adj[a] |= VMask{1} << b;
    local.adj[b] |= VMask{1} << a;
  });
  return local;
}

void check_cap(const Graph& g, const Coalition& comp, const OracleLimits& limits) {
  const std::size_t n = SubgraphView(g, comp).vertices().size();
  if (n > limits.max_cover_vertices || n > 32) {
    throw CapExceeded("instance too large for exact oracle: " +
                      std::to_string(n) + " vertices in a component (cap " +
                      std::to_string(std::min<std::size_t>(
                          limits.max_cover_vertices, 32)) +
                      ")");
  }
}

std::size_t search_size(const Graph& g, const Coalition& comp,
                        const OracleLimits& limits) {
  check_cap(g, comp, limits);
  LocalGraph local = localize(g, comp);
  const VMask all = local.vertices.size() == 32
                        ? ~VMask{0}
                        : (VMask{1} << local.vertices.size()) - 1;
  CoverSolver solver(std::move(local.adj));
  return static_cast<std::size_t>(solver.solve(all));
}

// Greedy in label order: keep a vertex whenever some minimum cover consistent
// with earlier decisions contains it. That yields the lexicographically
// smallest minimum cover.
std::vector<VertexId> search_cover(const Graph& g, const Coalition& comp,
                                   const OracleLimits& limits) {
  check_cap(g, comp, limits);
  LocalGraph local = localize(g, comp);
  const std::size_t n = local.vertices.size();
  VMask alive = n == 32 ? ~VMask{0} : (VMask{1} << n) - 1;
  CoverSolver solver(local.adj);
  int remaining = solver.solve(alive);
  std::vector<bool> chosen(n, false);
  for (std::size_t v = 0; v < n && remaining > 0; ++v) {
    const VMask bit = VMask{1} << v;
    if ((alive & bit) == 0 || solver.degree(static_cast<int>(v), alive) == 0) {
      continue;
    }
    if (1 + solver.solve(alive & ~bit) == remaining) {
      chosen[v] = true;
      alive &= ~bit;
      remaining -= 1;
    } else {
      const VMask nb = solver.neighbours(static_cast<int>(v), alive);
      for (VMask rest = nb; rest != 0; rest &= rest - 1) {
        chosen[static_cast<std::size_t>(__builtin_ctz(rest))] = true;
      }
      alive &= ~nb & ~bit;
      remaining -= __builtin_popcount(nb);
    }
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (chosen[v]) out.push_back(local.vertices[v]);
  }
  return out;
}

}  // namespace

VertexCover vertex_cover_number(const Graph& g, const Coalition& s,
                                const OracleLimits& limits) {
  VertexCover result;
  for (const Coalition& comp : components(g, s)) {
    const ComponentShape shape = shape_of(g, comp);
    auto part = shape.small_tree ? small_tree_cover(g, comp, shape.diameter)
                                 : search_cover(g, comp, limits);
    result.vertices.insert(result.vertices.end(), part.begin(), part.end());
  }
  std::sort(result.vertices.begin(), result.vertices.end(),
            [&](VertexId x, VertexId y) { return g.rank(x) < g.rank(y); });
  result.size = result.vertices.size();
  return result;
}

std::size_t vertex_cover_size(const Graph& g, const Coalition& s,
                              const OracleLimits& limits) {
  std::size_t total = 0;
  for (const Coalition& comp : components(g, s)) {
    const ComponentShape shape = shape_of(g, comp);
    if (shape.small_tree) {
      total += shape.diameter == 3 ? 2 : 1;
    } else {
      total += search_size(g, comp, limits);
    }
  }
  return total;
}

namespace {

// Kuhn's augmenting paths from the colour-0 side.
class BipartiteMatcher {
 public:
  BipartiteMatcher(const std::vector<std::vector<int>>& adj,
                   const std::vector<int>& side)
      : adj_(adj), side_(side), mate_(adj.size(), -1) {}

  std::size_t run() {
    std::size_t size = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (side_[u] != 0) continue;
      visited_.assign(adj_.size(), false);
      if (augment(static_cast<int>(u))) ++size;
    }
    return size;
  }

 private:
  bool augment(int u) {
    for (int w : adj_[static_cast<std::size_t>(u)]) {
      if (visited_[static_cast<std::size_t>(w)]) continue;
      visited_[static_cast<std::size_t>(w)] = true;
      const int m = mate_[static_cast<std::size_t>(w)];
      if (m == -1 || augment(m)) {
        mate_[static_cast<std::size_t>(w)] = u;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  const std::vector<int>& side_;
  std::vector<int> mate_;
  std::vector<bool> visited_;
};

std::size_t max_matching(const Graph& g, const Coalition& s) {
  if (s.empty()) return 0;
  const SubgraphView view(g, s);
  std::unordered_map<VertexId, int> pos;
  for (std::size_t k = 0; k < view.vertices().size(); ++k) {
    pos[view.vertices()[k]] = static_cast<int>(k);
  }
  const std::size_t n = view.vertices().size();
  std::vector<std::vector<int>> adj(n);
  s.for_each([&](EdgeId e) {
    const int a = pos.at(g.endpoints(e).first);
    const int b = pos.at(g.endpoints(e).second);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  });

  std::vector<int> side(n, -1);
  bool bipartite = true;
  for (std::size_t start = 0; start < n && bipartite; ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty() && bipartite) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(u)]) {
        int& sw = side[static_cast<std::size_t>(w)];
        if (sw == -1) {
          sw = 1 - side[static_cast<std::size_t>(u)];
          stack.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(u)]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite) return BipartiteMatcher(adj, side).run();

  using BGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(n);
  s.for_each([&](EdgeId e) {
    boost::add_edge(static_cast<std::size_t>(pos.at(g.endpoints(e).first)),
                    static_cast<std::size_t>(pos.at(g.endpoints(e).second)), bg);
  });
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return boost::matching_size(bg, &mate[0]);
}

}  // namespace

std::size_t matching_size(const Graph& g, const Coalition& s) {
  if (s.bound() > g.edge_count()) {
    throw ContractViolation("coalition {" + s.key() +
                            "} names edges outside the graph");
  }
  return max_matching(g, s);
}

Matching matching_number(const Graph& g, const Coalition& s) {
  Matching result;
  result.size = matching_size(g, s);
  Coalition remaining = s;
  std::size_t need = result.size;
  for (EdgeId e : s.members()) {
    if (need == 0) break;
    if (!remaining.contains(e)) continue;
    Coalition rest = remaining;
    remaining.for_each([&](EdgeId f) {
      if (f == e || g.adjacent_edges(e, f)) rest.erase(f);
    });
    if (1 + max_matching(g, rest) == need) {
      result.edges.push_back(e);
      remaining = std::move(rest);
      --need;
    } else {
      remaining.erase(e);
    }
  }
  return result;
}

}  // namespace vcpmas
