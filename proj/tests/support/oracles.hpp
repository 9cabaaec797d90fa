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


// Brute-force reference implementations. They only read the edge list of a
// Graph and never call the library's algorithms, so tests can compare the two.

#ifndef VCPMAS_TESTS_ORACLES_HPP
#define VCPMAS_TESTS_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "vcpmas/allocation.hpp"
#include "vcpmas/graph.hpp"
#include "vcpmas/preference.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct EdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> e;

  explicit EdgeList(const vcpmas::Graph& g) : n(static_cast<int>(g.vertex_count())) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto [a, b] = g.endpoints(i);
      e.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  int m() const { return static_cast<int>(e.size()); }
  Mask full() const { return m() == 32 ? ~Mask{0} : (Mask{1} << m()) - 1; }
};

inline bool in(Mask s, int i) { return (s >> i) & 1U; }

inline std::uint64_t touched(const EdgeList& g, Mask s) {
  std::uint64_t vs = 0;
  for (int i = 0; i < g.m(); ++i) {
    if (in(s, i)) vs |= (1ULL << g.e[i].first) | (1ULL << g.e[i].second);
  }
  return vs;
}

/// Smallest vertex set touching every edge of s, by trying all subsets of V_S.
inline int tau(const EdgeList& g, Mask s) {
  const std::uint64_t vs = touched(g, s);
  std::vector<int> verts;
  for (int v = 0; v < g.n; ++v) if ((vs >> v) & 1U) verts.push_back(v);
  const int k = static_cast<int>(verts.size());
  int best = k;
  for (std::uint64_t pick = 0; pick < (1ULL << k); ++pick) {
    const int size = std::popcount(pick);
    if (size >= best) continue;
    std::uint64_t cover = 0;
    for (int j = 0; j < k; ++j) if ((pick >> j) & 1U) cover |= 1ULL << verts[j];
    bool ok = true;
    for (int i = 0; i < g.m() && ok; ++i) {
      if (in(s, i)) ok = ((cover >> g.e[i].first) & 1U) || ((cover >> g.e[i].second) & 1U);
    }
    if (ok) best = size;
  }
  return best;
}

inline bool is_matching(const EdgeList& g, Mask m) {
  std::uint64_t used = 0;
  for (int i = 0; i < g.m(); ++i) {
    if (!in(m, i)) continue;
    const std::uint64_t ends = (1ULL << g.e[i].first) | (1ULL << g.e[i].second);
    if (used & ends) return false;
    used |= ends;
  }
  return true;
}

/// Largest pairwise-disjoint subset of s, by trying every subset.
inline int nu(const EdgeList& g, Mask s) {
  int best = 0;
  for (Mask m = s;; m = (m - 1) & s) {
    if (std::popcount(m) > best && is_matching(g, m)) best = std::popcount(m);
    if (m == 0) break;
  }
  return best;
}

/// Tries every 2-colouring of V_S.
inline bool bipartite(const EdgeList& g, Mask s) {
  for (std::uint64_t colour = 0; colour < (1ULL << g.n); ++colour) {
    bool ok = true;
    for (int i = 0; i < g.m() && ok; ++i) {
      if (in(s, i)) ok = ((colour >> g.e[i].first) & 1U) != ((colour >> g.e[i].second) & 1U);
    }
    if (ok) return true;
  }
  return false;
}

inline std::vector<std::vector<bool>> adjacency(const EdgeList& g) {
  std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
  for (auto [a, b] : g.e) adj[a][b] = adj[b][a] = true;
  return adj;
}

/// Pattern as a subgraph: tries every injective sequence of vertices.
inline bool contains(const EdgeList& g, vcpmas::Pattern p) {
  const auto adj = adjacency(g);
  const int len = p == vcpmas::Pattern::kK3 ? 3 : p == vcpmas::Pattern::kC4 ? 4
                : p == vcpmas::Pattern::kP4 ? 4 : 5;
  const bool closed = p == vcpmas::Pattern::kK3 || p == vcpmas::Pattern::kC4;
  std::vector<int> seq;
  std::vector<bool> used(g.n, false);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(seq.size()) == len) {
      for (int k = 0; k + 1 < len; ++k) if (!adj[seq[k]][seq[k + 1]]) return false;
      return !closed || adj[seq.back()][seq.front()];
    }
    for (int v = 0; v < g.n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      if (rec()) return true;
      seq.pop_back();
      used[v] = false;
    }
    return false;
  };
  return rec();
}

/// Every component (ignoring isolated vertices) is a tree of diameter <= 3,
/// using Floyd-Warshall distances.
inline bool small_diameter_forest(const EdgeList& g) {
  constexpr int kInf = 1 << 20;
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kInf));
  for (int v = 0; v < g.n; ++v) d[v][v] = 0;
  for (auto [a, b] : g.e) d[a][b] = d[b][a] = 1;
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::vector<bool> seen(g.n, false);
  for (int v = 0; v < g.n; ++v) {
    if (seen[v]) continue;
    int verts = 0, edges = 0, diam = 0;
    for (int w = 0; w < g.n; ++w) {
      if (d[v][w] >= kInf) continue;
      seen[w] = true;
      ++verts;
      for (int u = 0; u < g.n; ++u) if (d[v][u] < kInf) diam = std::max(diam, d[w][u]);
    }
    for (auto [a, b] : g.e) if (d[v][a] < kInf) ++edges;
    if (edges != verts - 1 || diam > 3) return false;
  }
  return true;
}

/// gamma over every mask.
inline std::vector<int> gamma_table(const EdgeList& g) {
  std::vector<int> t(std::size_t{1} << g.m());
  for (Mask s = 0; s < t.size(); ++s) t[s] = tau(g, s);
  return t;
}

inline bool submodular(const EdgeList& g) {
  const auto t = gamma_table(g);
  for (Mask s = 0; s < t.size(); ++s)
    for (Mask u = 0; u < t.size(); ++u)
      if (t[s] + t[u] < t[s | u] + t[s & u]) return false;
  return true;
}

/// Definitionally stable: every edge of s outside m is beaten at one of its
/// endpoints by an edge of m. Candidates are all subsets of s.
inline std::vector<Mask> stable_matchings(const vcpmas::PreferenceSystem& ps,
                                          const EdgeList& g, Mask s) {
  std::vector<Mask> out;
  for (Mask m = s;; m = (m - 1) & s) {
    if (is_matching(g, m)) {
      bool stable = true;
      for (int i = 0; i < g.m() && stable; ++i) {
        if (!in(s, i) || in(m, i)) continue;
        bool beaten = false;
        for (int j = 0; j < g.m() && !beaten; ++j) {
          if (!in(m, j)) continue;
          for (int v : {g.e[i].first, g.e[i].second}) {
            if ((g.e[j].first == v || g.e[j].second == v) &&
                ps.rank(static_cast<std::size_t>(v), static_cast<std::size_t>(j)) <
                    ps.rank(static_cast<std::size_t>(v), static_cast<std::size_t>(i))) {
              beaten = true;
            }
          }
        }
        stable = beaten;
      }
      if (stable) out.push_back(m);
    }
    if (m == 0) break;
  }
  return out;
}

/// An integral scheme as, for each mask, the mask of edges paying 1.
using IntegralTable = std::vector<Mask>;

/// Every per-coalition choice of gamma(S) paying edges, unfiltered.
/// Calls f on each of the (product of binomials) candidates.
inline void for_each_integral_candidate(const EdgeList& g,
                                        const std::function<void(const IntegralTable&)>& f) {
  const auto t = gamma_table(g);
  const Mask n = static_cast<Mask>(t.size());
  std::vector<std::vector<Mask>> choices(n);
  for (Mask s = 1; s < n; ++s) {
    for (Mask p = s;; p = (p - 1) & s) {
      if (std::popcount(p) == t[s]) choices[s].push_back(p);
      if (p == 0) break;
    }
  }
  IntegralTable table(n, 0);
  std::function<void(Mask)> rec = [&](Mask s) {
    if (s == n) return f(table);
    for (Mask p : choices[s]) {
      table[s] = p;
      rec(s + 1);
    }
  };
  rec(1);
}

/// All integral schemes meeting efficiency and monotonicity, by backtracking
/// over coalitions in increasing size. A candidate for T is kept only if every
/// edge it charges also pays in each T - j, which is exactly the covering-pair
/// monotonicity constraint restricted to 0/1 payments.
inline std::vector<IntegralTable> integral_pmas(const EdgeList& g) {
  const auto t = gamma_table(g);
  const Mask n = static_cast<Mask>(t.size());
  std::vector<Mask> order;
  for (Mask s = 1; s < n; ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::vector<IntegralTable> out;
  IntegralTable table(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(table);
      return;
    }
    const Mask s = order[k];
    for (Mask p = s;; p = (p - 1) & s) {
      if (std::popcount(p) == t[s]) {
        bool ok = true;
        for (int j = 0; j < g.m() && ok; ++j) {
          if (!in(s, j)) continue;
          const Mask smaller = s & ~(Mask{1} << j);
          if (smaller != 0 && (p & smaller & ~table[smaller]) != 0) ok = false;
        }
        if (ok) {
          table[s] = p;
          rec(k + 1);
        }
      }
      if (p == 0) break;
    }
  };
  rec(0);
  return out;
}

inline vcpmas::AllocationScheme to_scheme(const EdgeList& g, const IntegralTable& table) {
  vcpmas::AllocationScheme::Table out;
  for (Mask s = 1; s < table.size(); ++s) {
    const auto c = vcpmas::Coalition::from_mask(s);
    std::vector<vcpmas::Rational> values;
    for (int i = 0; i < g.m(); ++i) {
      if (in(s, i)) values.emplace_back(in(table[s], i) ? 1 : 0);
    }
    out.emplace(c, vcpmas::CostAllocation(c, std::move(values)));
  }
  return vcpmas::AllocationScheme::from_table(static_cast<std::size_t>(g.m()),
                                              std::move(out));
}

/// The paying-edge masks of an integral library scheme.
inline IntegralTable to_table(const EdgeList& g, const vcpmas::AllocationScheme& scheme) {
  IntegralTable table(std::size_t{1} << g.m(), 0);
  for (Mask s = 1; s < table.size(); ++s) {
    const auto a = scheme.at(vcpmas::Coalition::from_mask(s));
    for (int i = 0; i < g.m(); ++i) {
      if (in(s, i) && a.at(static_cast<std::size_t>(i)) == vcpmas::Rational(1)) table[s] |= Mask{1} << i;
    }
  }
  return table;
}

/// 0/1 allocations on the grand coalition that are efficient and charge no
/// coalition more than its cost.
inline std::vector<Mask> integral_core(const EdgeList& g) {
  const auto t = gamma_table(g);
  std::vector<Mask> out;
  const Mask all = g.full();
  for (Mask a = 0; a <= all; ++a) {
    if (std::popcount(a) != t[all]) continue;
    bool ok = true;
    for (Mask s = 1; s <= all && ok; ++s) ok = std::popcount(a & s) <= t[s];
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace oracle

#endif  // VCPMAS_TESTS_ORACLES_HPP
