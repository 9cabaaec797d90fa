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

#ifndef VCPMAS_PMAS_HPP
#define VCPMAS_PMAS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vcpmas/allocation.hpp"
#include "vcpmas/coalition.hpp"
#include "vcpmas/game.hpp"
#include "vcpmas/graph.hpp"

namespace vcpmas {

// ---------------------------------------------------------------------------
// Recognition and classification
// ---------------------------------------------------------------------------

struct Recognition {
  bool population_monotonic = false;
  /// Set when population_monotonic is false.
  std::optional<Pattern> pattern;
  std::vector<VertexId> witness;
};

/// A vertex cover game has a PMAS exactly when every component of the graph
/// is a tree of diameter at most 3, i.e. the graph is (K3, C4, P5)-free.
/// Negative answers carry a K3, C4 or P5 witness, searched in that order.
Recognition recognize_population_monotonic(const Graph& g);

enum class ComponentKind { kSingleEdge, kStar, kPisces };

std::string_view kind_name(ComponentKind kind);

/// Shape of one component of a population monotonic graph.
///
/// A star has one non-pendant vertex, its center. A single edge is a
/// degenerate star whose center is the endpoint with the smaller label. A
/// pisces (diameter 3) has two non-pendant vertices, the bases, and the edge
/// joining them is the free rider.
struct ComponentClassification {
  ComponentKind kind = ComponentKind::kSingleEdge;
  Coalition edges;
  /// Center, or both bases in label order.
  std::vector<VertexId> cover;
  std::optional<EdgeId> free_rider;
  /// Non-free-rider edges at each cover vertex, parallel to `cover`.
  std::vector<std::vector<EdgeId>> owned_edges;
};

/// C*, the centers and bases, together with the per-coalition selection
/// C*_S of a minimum vertex cover of G[S] inside C*.
///
/// C*_S takes, per component of G[S], the one C* vertex of a star-shaped
/// component or both bases of a pisces-shaped one. A coalition that holds a
/// free rider and nothing adjacent to it selects the smaller-label base.
class CoverSystem {
 public:
  CoverSystem(std::shared_ptr<const Graph> g,
              const std::vector<ComponentClassification>& parts);

  const Graph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const Graph>& shared_graph() const noexcept {
    return graph_;
  }

  /// C* in label order.
  const std::vector<VertexId>& vertices() const noexcept { return cover_; }
  bool contains(VertexId v) const;
  bool is_free_rider(EdgeId e) const { return free_rider_.at(e); }
  const std::vector<EdgeId>& free_riders() const noexcept { return riders_; }
  /// The C* vertex a non-free-rider edge hangs from.
  VertexId owner(EdgeId e) const;
  /// Non-free-rider edges at a C* vertex, ascending.
  const std::vector<EdgeId>& owned_edges(VertexId v) const;

  /// True when the free rider e is in s together with an edge adjacent to it.
  bool accompanied(EdgeId e, const Coalition& s) const;

  /// C*_S in label order.
  std::vector<VertexId> select(const Coalition& s) const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<VertexId> cover_;
  std::vector<bool> in_cover_;
  std::vector<bool> free_rider_;
  std::vector<EdgeId> riders_;
  std::vector<VertexId> owner_;
  std::vector<std::vector<EdgeId>> owned_;
  std::vector<std::size_t> component_of_edge_;
  std::vector<ComponentClassification> parts_;
};

struct Classification {
  std::vector<ComponentClassification> components;
  CoverSystem cover;
};

/// Throws NotPopulationMonotonic (with the recognition witness) unless every
/// component is a tree of diameter at most 3.
Classification classify_components(std::shared_ptr<const Graph> g);
Classification classify_components(const Graph& g);

// ---------------------------------------------------------------------------
// The constructive scheme
// ---------------------------------------------------------------------------

/// Number of non-free-rider edges of s at the C*_S vertex covering i.
/// Throws ContractViolation when i is a free rider or not in s.
std::size_t lambda(const Coalition& s, EdgeId i, const CoverSystem& cover);

/// Allocation of the constructive PMAS on one coalition: an accompanied free
/// rider pays 0, a lone free rider pays 1, any other edge pays 1/lambda.
CostAllocation pmas_allocation(const CoverSystem& cover, const Coalition& s);

/// Rule-backed PMAS. Throws NotPopulationMonotonic with a witness when none
/// exists.
AllocationScheme construct_pmas(std::shared_ptr<const Graph> g);
AllocationScheme construct_pmas(const Graph& g);

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

struct Violation {
  enum class Kind { kEfficiency, kMonotonicity };

  Kind kind = Kind::kEfficiency;
  /// The coalition whose efficiency fails, or the smaller coalition S.
  Coalition coalition;
  /// T = S + j for monotonicity violations.
  std::optional<Coalition> superset;
  std::optional<EdgeId> edge;
  /// Efficiency: allocated total vs gamma. Monotonicity: a[S,i] vs a[T,i].
  Rational lhs;
  Rational rhs;

  std::string describe() const;
};

struct VerifyOptions {
  /// Keep scanning after the first violation.
  bool collect_all = false;
  std::size_t max_violations = 100000;
};

struct PmasReport {
  bool ok = true;
  std::vector<Violation> violations;

  explicit operator bool() const noexcept { return ok; }
  const Violation* first() const noexcept {
    return violations.empty() ? nullptr : &violations.front();
  }
};

/// Checks efficiency on every nonempty coalition, then monotonicity on every
/// covering pair (S, S + j). Coalitions are visited by size, then
/// lexicographically. Throws CapExceeded past the game's exhaustive cap and
/// MalformedScheme when a coalition is missing.
PmasReport verify_pmas(const VertexCoverGame& game, const AllocationScheme& scheme,
                       const VerifyOptions& options = {});

/// One link a[larger, edge] >= a[smaller, edge] of a monotonicity chain.
struct ChainStep {
  Coalition larger;
  Coalition smaller;
  EdgeId edge = 0;
};

/// Six monotonicity links whose larger side sums to gamma = 4 under
/// efficiency while the smaller side sums to gamma = 3: over a triangle, the
/// full triangle twice against its three pairs; over four consecutive edges
/// 1..4 of a path or cycle, {1,2,3} and {2,3,4} against {1,2}, {2,3}, {3,4}.
/// `witness` is a vertex sequence as returned for kK3, kC4 or kP5.
std::vector<ChainStep> obstruction_chain(const Graph& g, Pattern pattern,
                                         const std::vector<VertexId>& witness);

struct ChainTrace {
  Rational upper;
  Rational lower;
  std::vector<ChainStep> violated;
};

ChainTrace evaluate_chain(const AllocationScheme& scheme,
                          const std::vector<ChainStep>& chain);

// ---------------------------------------------------------------------------
// Dual description
// ---------------------------------------------------------------------------

/// x >= 0 and sum over delta_S(v) of x <= 1 for every v in V_S.
bool check_dual_feasible(const Graph& g, const Coalition& s,
                         const CostAllocation& x);

/// Feasible and sum(x) == gamma(S). G[S] must be bipartite.
bool check_dual_optimal(const VertexCoverGame& game, const Coalition& s,
                        const CostAllocation& x);

/// Feasible, tight at every vertex of C*_S, and zero on every accompanied
/// free rider.
bool check_pi_star(const Graph& g, const Coalition& s, const CostAllocation& x,
                   const CoverSystem& cover);

}  // namespace vcpmas

#endif  // VCPMAS_PMAS_HPP
