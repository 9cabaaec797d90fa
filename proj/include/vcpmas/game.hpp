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

#ifndef VCPMAS_GAME_HPP
#define VCPMAS_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "vcpmas/allocation.hpp"
#include "vcpmas/coalition.hpp"
#include "vcpmas/graph.hpp"

namespace vcpmas {

struct GameLimits {
  /// Largest player count for checks that enumerate every coalition.
  std::size_t max_exhaustive_edges = 16;
  /// Largest player count for the all-pairs submodularity check.
  std::size_t max_pair_edges = 12;
  OracleLimits oracle;
};

/// A yes/no answer with an optional counterexample.
template <typename Witness>
struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

using CoalitionPair = std::pair<Coalition, Coalition>;

/// The vertex cover game on a graph: players are edges and
/// gamma(S) = tau(G[S]), with gamma(empty) = 0.
///
/// gamma() is memoized behind a mutex, so one game may be queried from
/// several threads.
class VertexCoverGame {
 public:
  explicit VertexCoverGame(Graph g, GameLimits limits = {});
  explicit VertexCoverGame(std::shared_ptr<const Graph> g, GameLimits limits = {});
  ~VertexCoverGame();
  VertexCoverGame(VertexCoverGame&&) noexcept;
  VertexCoverGame& operator=(VertexCoverGame&&) noexcept;

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const noexcept {
    return graph_;
  }
  const GameLimits& limits() const noexcept { return limits_; }
  std::size_t players() const noexcept { return graph_->edge_count(); }
  Coalition grand_coalition() const { return graph_->players(); }

  std::size_t gamma(const Coalition& s) const;
  /// Bypasses the memo table.
  std::size_t gamma_uncached(const Coalition& s) const;

  /// gamma for every mask in [0, 2^n). Built once; throws CapExceeded when
  /// n exceeds max_exhaustive_edges.
  const std::vector<std::uint8_t>& gamma_table() const;

  /// Throws CapExceeded when players() > cap.
  void require_players_at_most(std::size_t cap, const char* what) const;

 private:
  struct Memo;

  std::shared_ptr<const Graph> graph_;
  GameLimits limits_;
  std::unique_ptr<Memo> memo_;
};

/// gamma(S) <= gamma(S + j) for every S and j not in S. Covering pairs are
/// enough by transitivity. Witness is (S, S + j).
Verdict<CoalitionPair> is_monotone_game(const VertexCoverGame& game);

/// gamma(S) + gamma(T) >= gamma(S | T) + gamma(S & T) over all pairs.
Verdict<CoalitionPair> is_submodular_game(const VertexCoverGame& game);

/// (K3, P4)-freeness of the graph, which characterizes submodular games.
bool is_submodular_graph(const Graph& g);

/// nu(G) == tau(G), which characterizes a nonempty core.
bool is_balanced(const VertexCoverGame& game);

/// Bipartiteness, which characterizes nonempty cores for every subgame.
bool is_totally_balanced(const VertexCoverGame& game);

/// Efficiency on N and group rationality on every nonempty S. Witness is the
/// first violated coalition (N itself when efficiency fails).
Verdict<Coalition> core_membership(const VertexCoverGame& game,
                                   const CostAllocation& alloc);

/// Incidence vector of a maximum matching. Throws NotBalanced when
/// nu(G) < tau(G).
CostAllocation core_element_from_matching(const VertexCoverGame& game);

}  // namespace vcpmas

#endif  // VCPMAS_GAME_HPP
