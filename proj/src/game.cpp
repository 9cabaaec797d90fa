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

#include "vcpmas/game.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

#include "vcpmas/errors.hpp"

namespace vcpmas {

struct VertexCoverGame::Memo {
  std::mutex mu;
  std::unordered_map<Coalition, std::size_t> values;
  std::once_flag table_once;
  std::vector<std::uint8_t> table;
};

VertexCoverGame::VertexCoverGame(Graph g, GameLimits limits)
    : VertexCoverGame(std::make_shared<const Graph>(std::move(g)), limits) {}

VertexCoverGame::VertexCoverGame(std::shared_ptr<const Graph> g, GameLimits limits)
    : graph_(std::move(g)), limits_(limits), memo_(std::make_unique<Memo>()) {}

VertexCoverGame::~VertexCoverGame() = default;
VertexCoverGame::VertexCoverGame(VertexCoverGame&&) noexcept = default;
VertexCoverGame& VertexCoverGame::operator=(VertexCoverGame&&) noexcept = default;

std::size_t VertexCoverGame::gamma_uncached(const Coalition& s) const {
  if (s.bound() > players()) {
    throw ContractViolation("coalition {" + s.key() + "} is not a set of the " +
                            std::to_string(players()) + " players");
  }
  if (s.empty()) return 0;
  return vertex_cover_size(*graph_, s, limits_.oracle);
}

std::size_t VertexCoverGame::gamma(const Coalition& s) const {
  if (s.empty()) return 0;
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (auto it = memo_->values.find(s); it != memo_->values.end()) {
      return it->second;
    }
  }
  const std::size_t value = gamma_uncached(s);
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->values.emplace(s, value);
  return value;
}

void VertexCoverGame::require_players_at_most(std::size_t cap,
                                              const char* what) const {
  if (players() > cap || players() >= 64) {
    throw CapExceeded(std::string(what) + " enumerates every coalition; " +
                      std::to_string(players()) + " players exceeds the cap of " +
                      std::to_string(cap));
  }
}

const std::vector<std::uint8_t>& VertexCoverGame::gamma_table() const {
  require_players_at_most(limits_.max_exhaustive_edges, "the gamma table");
  std::call_once(memo_->table_once, [this] {
    const Coalition::Mask count = Coalition::Mask{1} << players();
    std::vector<std::uint8_t> table(count, 0);
    for (Coalition::Mask m = 1; m < count; ++m) {
      table[m] = static_cast<std::uint8_t>(gamma_uncached(Coalition::from_mask(m)));
    }
    memo_->table = std::move(table);
  });
  return memo_->table;
}

Verdict<CoalitionPair> is_monotone_game(const VertexCoverGame& game) {
  const auto& gamma = game.gamma_table();
  const std::size_t n = game.players();
  const Coalition::Mask count = Coalition::Mask{1} << n;
  for (Coalition::Mask s = 0; s < count; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      const Coalition::Mask bit = Coalition::Mask{1} << j;
      if ((s & bit) != 0) continue;
      if (gamma[s] > gamma[s | bit]) {
        return {false, CoalitionPair{Coalition::from_mask(s),
                                     Coalition::from_mask(s | bit)}};
      }
    }
  }
  return {};
}

Verdict<CoalitionPair> is_submodular_game(const VertexCoverGame& game) {
  game.require_players_at_most(game.limits().max_pair_edges,
                               "the submodularity check");
  const auto& gamma = game.gamma_table();
  const Coalition::Mask count = Coalition::Mask{1} << game.players();
  for (Coalition::Mask s = 0; s < count; ++s) {
    for (Coalition::Mask t = s + 1; t < count; ++t) {
      if (gamma[s] + gamma[t] < gamma[s | t] + gamma[s & t]) {
        return {false,
                CoalitionPair{Coalition::from_mask(s), Coalition::from_mask(t)}};
      }
    }
  }
  return {};
}

bool is_submodular_graph(const Graph& g) {
  return !find_forbidden_subgraph(g, Pattern::kK3) &&
         !find_forbidden_subgraph(g, Pattern::kP4);
}

bool is_balanced(const VertexCoverGame& game) {
  const Coalition all = game.grand_coalition();
  return matching_size(game.graph(), all) == game.gamma(all);
}

bool is_totally_balanced(const VertexCoverGame& game) {
  return is_bipartite(game.graph());
}

Verdict<Coalition> core_membership(const VertexCoverGame& game,
                                   const CostAllocation& alloc) {
  const Coalition all = game.grand_coalition();
  if (!(alloc.coalition() == all)) {
    throw ContractViolation("core membership needs an allocation on all " +
                            std::to_string(game.players()) + " players");
  }
  const auto& gamma = game.gamma_table();
  if (alloc.sum() != Rational(static_cast<std::int64_t>(gamma.back()))) {
    return {false, all};
  }
  const Coalition::Mask count = Coalition::Mask{1} << game.players();
  for (Coalition::Mask s = 1; s < count; ++s) {
    Rational total(0);
    for (Coalition::Mask rest = s; rest != 0; rest &= rest - 1) {
      total += alloc.values()[static_cast<std::size_t>(__builtin_ctzll(rest))];
    }
    if (total > Rational(static_cast<std::int64_t>(gamma[s]))) {
      return {false, Coalition::from_mask(s)};
    }
  }
  return {};
}

CostAllocation core_element_from_matching(const VertexCoverGame& game) {
  const Coalition all = game.grand_coalition();
  const Matching m = matching_number(game.graph(), all);
  const std::size_t tau = game.gamma(all);
  if (m.size != tau) {
    throw NotBalanced("game is not balanced: nu = " + std::to_string(m.size) +
                      " < tau = " + std::to_string(tau));
  }
  std::vector<Rational> values(game.players(), Rational(0));
  for (EdgeId e : m.edges) values[e] = Rational(1);
  return CostAllocation(all, std::move(values));
}

}  // namespace vcpmas
