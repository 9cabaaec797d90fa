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

#include "vcpmas/preference.hpp"

#include <algorithm>
#include <deque>

#include "vcpmas/errors.hpp"

namespace vcpmas {

PreferenceSystem::PreferenceSystem(std::shared_ptr<const Graph> g, Orders orders)
    : graph_(std::move(g)), orders_(std::move(orders)) {
  const Graph& G = *graph_;
  rank_.resize(G.vertex_count());
  for (VertexId v = 0; v < G.vertex_count(); ++v) {
    const auto& inc = G.incident_edges(v);
    rank_[v].assign(inc.size(), 0);
    const auto it = orders_.find(v);
    if (it == orders_.end()) {
      if (inc.size() >= 2) {
        throw ContractViolation("vertex '" + G.label(v) +
                                "' has degree " + std::to_string(inc.size()) +
                                " but no preference order");
      }
      continue;
    }
    std::vector<EdgeId> sorted = it->second;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != inc) {
      throw ContractViolation("order at '" + G.label(v) +
                              "' is not a permutation of its incident edges");
    }
    for (std::size_t pos = 0; pos < it->second.size(); ++pos) {
      const auto slot = std::lower_bound(inc.begin(), inc.end(), it->second[pos]);
      rank_[v][static_cast<std::size_t>(slot - inc.begin())] = pos;
    }
  }
  for (const auto& [v, order] : orders_) {
    if (v >= G.vertex_count()) {
      throw ContractViolation("preference order for an unknown vertex");
    }
  }
}

std::size_t PreferenceSystem::rank(VertexId v, EdgeId e) const {
  const auto& inc = graph_->incident_edges(v);
  const auto slot = std::lower_bound(inc.begin(), inc.end(), e);
  if (slot == inc.end() || *slot != e) {
    throw ContractViolation("edge " + std::to_string(e) + " is not incident to '" +
                            graph_->label(v) + "'");
  }
  return rank_[v][static_cast<std::size_t>(slot - inc.begin())];
}

std::vector<EdgeId> PreferenceSystem::restricted(VertexId v,
                                                 const Coalition& s) const {
  std::vector<EdgeId> out;
  for (EdgeId e : graph_->incident_edges(v)) {
    if (s.contains(e)) out.push_back(e);
  }
  std::sort(out.begin(), out.end(),
            [&](EdgeId a, EdgeId b) { return rank(v, a) < rank(v, b); });
  return out;
}

bool operator==(const PreferenceSystem& a, const PreferenceSystem& b) {
  if (a.graph_->edge_count() != b.graph_->edge_count() ||
      a.graph_->vertex_count() != b.graph_->vertex_count()) {
    return false;
  }
  for (VertexId v = 0; v < a.graph_->vertex_count(); ++v) {
    if (a.graph_->degree(v) >= 2 && a.rank_[v] != b.rank_[v]) return false;
  }
  return true;
}

bool free_riders_lowest(const PreferenceSystem& ps, const CoverSystem& cover) {
  const Graph& g = ps.graph();
  for (EdgeId f : cover.free_riders()) {
    const auto& [u, v] = g.endpoints(f);
    for (VertexId b : {u, v}) {
      if (ps.rank(b, f) + 1 != g.degree(b)) return false;
    }
  }
  return true;
}

Coalition gale_shapley(const PreferenceSystem& ps, const Coalition& s) {
  const Graph& g = ps.graph();
  const SubgraphView view(g, s);

  // Colour each component from its smallest-label vertex; colour 0 proposes.
  std::vector<int> side(g.vertex_count(), -1);
  std::vector<VertexId> proposers;
  for (VertexId start : view.vertices()) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      if (side[u] == 0) proposers.push_back(u);
      for (EdgeId e : view.incident_edges(u)) {
        const VertexId w = g.other_end(e, u);
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          throw UnsupportedInstance("G[{" + s.key() +
                                    "}] is not bipartite; no stable matching "
                                    "is guaranteed");
        }
      }
    }
  }
  std::sort(proposers.begin(), proposers.end(),
            [&](VertexId a, VertexId b) { return g.rank(a) < g.rank(b); });

  std::vector<std::vector<EdgeId>> lists(g.vertex_count());
  std::vector<std::size_t> next(g.vertex_count(), 0);
  for (VertexId p : proposers) lists[p] = ps.restricted(p, s);

  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> held(g.vertex_count(), kNone);
  std::deque<VertexId> idle(proposers.begin(), proposers.end());
  while (!idle.empty()) {
    const VertexId p = idle.front();
    idle.pop_front();
    if (next[p] == lists[p].size()) continue;
    const EdgeId e = lists[p][next[p]++];
    const VertexId r = g.other_end(e, p);
    if (held[r] == kNone) {
      held[r] = e;
    } else if (ps.prefers(r, e, held[r])) {
      idle.push_back(g.other_end(held[r], r));
      held[r] = e;
    } else {
      idle.push_front(p);
    }
  }
  Coalition m;
  for (VertexId v : view.vertices()) {
    if (side[v] == 1 && held[v] != kNone) m.insert(held[v]);
  }
  return m;
}

Verdict<EdgeId> is_stable(const PreferenceSystem& ps, const Coalition& s,
                          const Coalition& m) {
  if (!m.is_subset_of(s)) {
    throw ContractViolation("matching {" + m.key() + "} is not inside {" +
                            s.key() + "}");
  }
  const Graph& g = ps.graph();
  std::vector<EdgeId> at(g.vertex_count(), static_cast<EdgeId>(-1));
  Verdict<EdgeId> verdict;
  m.for_each([&](EdgeId e) {
    if (!verdict.holds) return;
    const auto& [u, v] = g.endpoints(e);
    for (VertexId x : {u, v}) {
      if (at[x] != static_cast<EdgeId>(-1)) {
        verdict = {false, e};
        return;
      }
      at[x] = e;
    }
  });
  if (!verdict.holds) return verdict;
  (s - m).for_each([&](EdgeId e) {
    if (!verdict.holds) return;
    const auto& [u, v] = g.endpoints(e);
    const bool dominated =
        (at[u] != static_cast<EdgeId>(-1) && ps.prefers(u, at[u], e)) ||
        (at[v] != static_cast<EdgeId>(-1) && ps.prefers(v, at[v], e));
    if (!dominated) verdict = {false, e};
  });
  return verdict;
}

AllocationScheme scheme_from_preferences(const PreferenceSystem& ps) {
  const Classification classification = classify_components(ps.shared_graph());
  if (!free_riders_lowest(ps, classification.cover)) {
    throw ContractViolation(
        "every free rider must be ranked last at both of its bases");
  }
  auto shared = std::make_shared<const PreferenceSystem>(ps);
  return AllocationScheme::from_rule(
      ps.graph().edge_count(), [shared](const Coalition& s) {
        if (s.empty() || s.bound() > shared->graph().edge_count()) {
          throw ContractViolation("coalition {" + s.key() +
                                  "} is not a nonempty set of players");
        }
        const Coalition m = gale_shapley(*shared, s);
        std::vector<Rational> values;
        values.reserve(s.size());
        s.for_each([&](EdgeId e) { values.emplace_back(m.contains(e) ? 1 : 0); });
        return CostAllocation(s, std::move(values));
      });
}

PreferenceSystem preferences_from_scheme(const VertexCoverGame& game,
                                         const AllocationScheme& scheme) {
  const Classification classification = classify_components(game.shared_graph());
  const Graph& g = game.graph();
  PreferenceSystem::Orders orders;
  for (VertexId v : classification.cover.vertices()) {
    Coalition rest(g.incident_edges(v));
    std::vector<EdgeId> order;
    while (!rest.empty()) {
      const CostAllocation a = scheme.at(rest);
      std::vector<EdgeId> units;
      for (std::size_t k = 0; k < a.members().size(); ++k) {
        const Rational& x = a.values()[k];
        if (x != Rational(0) && x != Rational(1)) {
          throw MalformedScheme("scheme is not integral: a[{" + rest.key() +
                                "}, " + std::to_string(a.members()[k]) +
                                "] = " + to_string(x));
        }
        if (x == Rational(1)) units.push_back(a.members()[k]);
      }
      if (units.size() != 1) {
        throw MalformedScheme("malformed integral scheme: {" + rest.key() +
                              "} at '" + g.label(v) + "' has " +
                              std::to_string(units.size()) +
                              " unit payments, expected 1");
      }
      order.push_back(units.front());
      rest.erase(units.front());
    }
    orders.emplace(v, std::move(order));
  }
  return PreferenceSystem(game.shared_graph(), std::move(orders));
}

PreferenceSystem canonical_preferences(const Classification& classification) {
  const CoverSystem& cover = classification.cover;
  const Graph& g = cover.graph();
  PreferenceSystem::Orders orders;
  for (VertexId v : cover.vertices()) {
    std::vector<EdgeId> order = cover.owned_edges(v);
    for (EdgeId e : g.incident_edges(v)) {
      if (cover.is_free_rider(e)) order.push_back(e);
    }
    orders.emplace(v, std::move(order));
  }
  return PreferenceSystem(cover.shared_graph(), std::move(orders));
}

// ---------------------------------------------------------------------------

IntegralPmasEnumerator::IntegralPmasEnumerator(std::shared_ptr<const Graph> g,
                                               std::size_t max_schemes)
    : classification_(
          std::make_shared<const Classification>(classify_components(g))),
      max_schemes_(max_schemes) {
  const CoverSystem& cover = classification_->cover;
  for (VertexId v : cover.vertices()) {
    vertices_.push_back(v);
    perms_.push_back(cover.owned_edges(v));
    std::optional<EdgeId> rider;
    for (EdgeId e : cover.graph().incident_edges(v)) {
      if (cover.is_free_rider(e)) rider = e;
    }
    riders_.push_back(rider);
  }
}

bool IntegralPmasEnumerator::advance() {
  for (std::size_t k = perms_.size(); k-- > 0;) {
    if (std::next_permutation(perms_[k].begin(), perms_[k].end())) return true;
  }
  return false;
}

std::optional<PreferenceSystem> IntegralPmasEnumerator::next_preferences() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  if (emitted_ == max_schemes_) {
    done_ = true;
    truncated_ = true;
    return std::nullopt;
  }
  PreferenceSystem::Orders orders;
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    std::vector<EdgeId> order = perms_[k];
    if (riders_[k]) order.push_back(*riders_[k]);
    orders.emplace(vertices_[k], std::move(order));
  }
  ++emitted_;
  return PreferenceSystem(classification_->cover.shared_graph(), std::move(orders));
}

std::optional<IntegralPmas> IntegralPmasEnumerator::next() {
  auto ps = next_preferences();
  if (!ps) return std::nullopt;
  AllocationScheme scheme = scheme_from_preferences(*ps);
  return IntegralPmas{std::move(*ps), std::move(scheme)};
}

std::vector<IntegralPmas> enumerate_integral_pmas(const Graph& g,
                                                  std::size_t max_schemes) {
  IntegralPmasEnumerator stream(std::make_shared<const Graph>(g), max_schemes);
  std::vector<IntegralPmas> out;
  while (auto item = stream.next()) out.push_back(std::move(*item));
  if (stream.truncated()) {
    throw CapExceeded("more than " + std::to_string(max_schemes) +
                      " integral PMASes");
  }
  return out;
}

boost::multiprecision::cpp_int count_integral_pmas(const Graph& g) {
  const Classification classification = classify_components(g);
  boost::multiprecision::cpp_int total = 1;
  for (VertexId v : classification.cover.vertices()) {
    const std::size_t k = classification.cover.owned_edges(v).size();
    for (std::size_t f = 2; f <= k; ++f) total *= f;
  }
  return total;
}

}  // namespace vcpmas
