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

#ifndef VCPMAS_PREFERENCE_HPP
#define VCPMAS_PREFERENCE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "vcpmas/allocation.hpp"
#include "vcpmas/game.hpp"
#include "vcpmas/graph.hpp"
#include "vcpmas/pmas.hpp"

namespace vcpmas {

/// Strict preference orders over incident edges, best first.
///
/// Every vertex of degree two or more needs an order; a degree-one vertex
/// may carry its trivial order or none. Equality ignores degree-one vertices
/// since their order is forced.
class PreferenceSystem {
 public:
  using Orders = std::map<VertexId, std::vector<EdgeId>>;

  /// Throws ContractViolation when an order is missing or is not a
  /// permutation of delta(v).
  PreferenceSystem(std::shared_ptr<const Graph> g, Orders orders);

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const noexcept {
    return graph_;
  }
  const Orders& orders() const noexcept { return orders_; }

  /// Position of e in v's order, 0 being the most preferred.
  std::size_t rank(VertexId v, EdgeId e) const;
  /// a dominates b at v.
  bool prefers(VertexId v, EdgeId a, EdgeId b) const {
    return rank(v, a) < rank(v, b);
  }
  /// v's order restricted to s.
  std::vector<EdgeId> restricted(VertexId v, const Coalition& s) const;

  friend bool operator==(const PreferenceSystem& a, const PreferenceSystem& b);

 private:
  std::shared_ptr<const Graph> graph_;
  Orders orders_;
  std::vector<std::vector<std::size_t>> rank_;  // [v][position in delta(v)]
};

/// Every free rider is last at both of its bases.
bool free_riders_lowest(const PreferenceSystem& ps, const CoverSystem& cover);

/// Deferred acceptance on G[s]. Per component, the colour class of the
/// smallest-label vertex proposes along its restricted order. On a star or
/// pisces forest every cover vertex ends up holding its best edge in s, so
/// the proposal side does not change the result. Throws UnsupportedInstance
/// when G[s] is not bipartite.
Coalition gale_shapley(const PreferenceSystem& ps, const Coalition& s);

/// m must be a subset of s. Witness is an edge of s \ m that no edge of m
/// dominates, or an edge of m sharing a vertex with another one.
Verdict<EdgeId> is_stable(const PreferenceSystem& ps, const Coalition& s,
                          const Coalition& m);

/// Integral scheme whose allocation on S is the incidence vector of the
/// stable matching of (G[S], prefs restricted to S). Throws
/// ContractViolation when a free rider is not ranked last, and
/// NotPopulationMonotonic when the graph admits no PMAS.
AllocationScheme scheme_from_preferences(const PreferenceSystem& ps);

/// Recovers the preference system of an integral PMAS: at each cover vertex,
/// repeatedly take the edge paying 1 on the remaining incident edges. Throws
/// MalformedScheme when a payment is not 0/1 or a step does not have exactly
/// one unit payment.
PreferenceSystem preferences_from_scheme(const VertexCoverGame& game,
                                         const AllocationScheme& scheme);

/// Preference system with every cover vertex ranking its non-free-rider edges
/// by index and any free rider last.
PreferenceSystem canonical_preferences(const Classification& classification);

struct IntegralPmas {
  PreferenceSystem preferences;
  AllocationScheme scheme;
};

/// Lazy stream of all integral PMASes, one per preference system with free
/// riders last. Cover vertices are taken in label order and each one's
/// permutations in lexicographic edge order; the last vertex varies fastest.
class IntegralPmasEnumerator {
 public:
  explicit IntegralPmasEnumerator(std::shared_ptr<const Graph> g,
                                  std::size_t max_schemes = 10000);

  std::optional<PreferenceSystem> next_preferences();
  std::optional<IntegralPmas> next();

  /// Set once the cap stopped the stream before it was exhausted.
  bool truncated() const noexcept { return truncated_; }
  std::size_t emitted() const noexcept { return emitted_; }

 private:
  bool advance();

  std::shared_ptr<const Classification> classification_;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<EdgeId>> perms_;
  std::vector<std::optional<EdgeId>> riders_;
  std::size_t max_schemes_;
  std::size_t emitted_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool truncated_ = false;
};

/// Collects the stream. Throws CapExceeded when more than max_schemes exist.
std::vector<IntegralPmas> enumerate_integral_pmas(const Graph& g,
                                                  std::size_t max_schemes = 10000);

/// Product over cover vertices of (number of non-free-rider edges)!.
boost::multiprecision::cpp_int count_integral_pmas(const Graph& g);

}  // namespace vcpmas

#endif  // VCPMAS_PREFERENCE_HPP
