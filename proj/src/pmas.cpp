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

#include "vcpmas/pmas.hpp"

#include <algorithm>
#include <unordered_map>

#include "vcpmas/errors.hpp"

namespace vcpmas {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ',';
    out += l;
  }
  return out;
}

std::vector<std::string> labels_of(const Graph& g,
                                   const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(g.label(v));
  return out;
}

bool small_tree(const Graph& g, const Coalition& comp) {
  return is_tree(g, comp) && diameter(g, comp) <= 3;
}

}  // namespace

NotPopulationMonotonic::NotPopulationMonotonic(const std::string& pattern,
                                               std::vector<std::string> witness)
    : Error("graph is not population monotonic: contains " + pattern + " on {" +
            join_labels(witness) + "}"),
      pattern_(pattern),
      witness_(std::move(witness)) {}

std::string_view kind_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kSingleEdge: return "single-edge";
    case ComponentKind::kStar: return "star";
    case ComponentKind::kPisces: return "pisces";
  }
  return "?";
}

Recognition recognize_population_monotonic(const Graph& g) {
  Recognition r;
  const auto parts = components(g);
  r.population_monotonic =
      std::all_of(parts.begin(), parts.end(),
                  [&](const Coalition& c) { return small_tree(g, c); });
  if (r.population_monotonic) return r;
  for (Pattern p : {Pattern::kK3, Pattern::kC4, Pattern::kP5}) {
    if (auto w = find_forbidden_subgraph(g, p)) {
      r.pattern = p;
      r.witness = std::move(*w);
      return r;
    }
  }
  // A component that is not a tree of diameter <= 3 has a cycle (hence a
  // K3, C4 or a P5 inside a longer cycle) or a path on five vertices.
  throw ContractViolation("no K3/C4/P5 witness found for a rejected graph");
}

// ---------------------------------------------------------------------------

CoverSystem::CoverSystem(std::shared_ptr<const Graph> g,
                         const std::vector<ComponentClassification>& parts)
    : graph_(std::move(g)), parts_(parts) {
  const Graph& G = *graph_;
  in_cover_.assign(G.vertex_count(), false);
  free_rider_.assign(G.edge_count(), false);
  owner_.assign(G.edge_count(), G.vertex_count());
  owned_.assign(G.vertex_count(), {});
  component_of_edge_.assign(G.edge_count(), parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c) {
    const auto& part = parts[c];
    part.edges.for_each([&](EdgeId e) { component_of_edge_.at(e) = c; });
    if (part.free_rider) {
      free_rider_.at(*part.free_rider) = true;
      riders_.push_back(*part.free_rider);
    }
    for (std::size_t k = 0; k < part.cover.size(); ++k) {
      const VertexId v = part.cover[k];
      in_cover_.at(v) = true;
      cover_.push_back(v);
      owned_.at(v) = part.owned_edges.at(k);
      for (EdgeId e : owned_[v]) owner_.at(e) = v;
    }
  }
  std::sort(cover_.begin(), cover_.end(),
            [&](VertexId a, VertexId b) { return G.rank(a) < G.rank(b); });
  std::sort(riders_.begin(), riders_.end());
}

bool CoverSystem::contains(VertexId v) const { return in_cover_.at(v); }

VertexId CoverSystem::owner(EdgeId e) const {
  if (free_rider_.at(e)) {
    throw ContractViolation("edge " + std::to_string(e) +
                            " is a free rider and has no single owner");
  }
  return owner_.at(e);
}

const std::vector<EdgeId>& CoverSystem::owned_edges(VertexId v) const {
  if (!in_cover_.at(v)) {
    throw ContractViolation("vertex '" + graph_->label(v) + "' is not in C*");
  }
  return owned_[v];
}

bool CoverSystem::accompanied(EdgeId e, const Coalition& s) const {
  const auto& [u, v] = graph_->endpoints(e);
  for (VertexId x : {u, v}) {
    for (EdgeId f : graph_->incident_edges(x)) {
      if (f != e && s.contains(f)) return true;
    }
  }
  return false;
}

std::vector<VertexId> CoverSystem::select(const Coalition& s) const {
  std::vector<bool> touched(parts_.size(), false);
  s.for_each([&](EdgeId e) { touched.at(component_of_edge_.at(e)) = true; });
  std::vector<VertexId> out;
  for (std::size_t c = 0; c < parts_.size(); ++c) {
    if (!touched[c]) continue;
    const auto& part = parts_[c];
    if (part.kind != ComponentKind::kPisces) {
      out.push_back(part.cover.front());
      continue;
    }
    bool any_owned = false;
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& mine = part.owned_edges[k];
      if (std::any_of(mine.begin(), mine.end(),
                      [&](EdgeId e) { return s.contains(e); })) {
        out.push_back(part.cover[k]);
        any_owned = true;
      }
    }
    // Only the free rider is present: the smaller-label base covers it.
    if (!any_owned) out.push_back(part.cover.front());
  }
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
    return graph_->rank(a) < graph_->rank(b);
  });
  return out;
}

Classification classify_components(std::shared_ptr<const Graph> g) {
  const Graph& G = *g;
  std::vector<ComponentClassification> parts;
  for (const Coalition& comp : components(G)) {
    if (!is_tree(G, comp) || diameter(G, comp) > 3) {
      const Recognition r = recognize_population_monotonic(G);
      throw NotPopulationMonotonic(std::string(pattern_name(*r.pattern)),
                                   labels_of(G, r.witness));
    }
    const SubgraphView view(G, comp);
    ComponentClassification part;
    part.edges = comp;
    std::vector<VertexId> inner;
    for (VertexId v : view.vertices()) {
      if (view.degree(v) >= 2) inner.push_back(v);
    }
    if (inner.empty()) {
      part.kind = ComponentKind::kSingleEdge;
      part.cover = {view.vertices().front()};
      part.owned_edges = {comp.members()};
    } else if (inner.size() == 1) {
      part.kind = ComponentKind::kStar;
      part.cover = inner;
      part.owned_edges = {comp.members()};
    } else {
      part.kind = ComponentKind::kPisces;
      part.cover = inner;
      part.free_rider = G.edge_between(inner[0], inner[1]);
      for (VertexId b : inner) {
        std::vector<EdgeId> mine;
        for (EdgeId e : G.incident_edges(b)) {
          if (e != *part.free_rider) mine.push_back(e);
        }
        part.owned_edges.push_back(std::move(mine));
      }
    }
    parts.push_back(std::move(part));
  }
  CoverSystem cover(g, parts);
  return Classification{std::move(parts), std::move(cover)};
}

Classification classify_components(const Graph& g) {
  return classify_components(std::make_shared<const Graph>(g));
}

// ---------------------------------------------------------------------------

std::size_t lambda(const Coalition& s, EdgeId i, const CoverSystem& cover) {
  if (!s.contains(i)) {
    throw ContractViolation("edge " + std::to_string(i) + " is not in {" +
                            s.key() + "}");
  }
  const VertexId v = cover.owner(i);
  const auto& mine = cover.owned_edges(v);
  return static_cast<std::size_t>(std::count_if(
      mine.begin(), mine.end(), [&](EdgeId e) { return s.contains(e); }));
}

CostAllocation pmas_allocation(const CoverSystem& cover, const Coalition& s) {
  if (s.empty() || s.bound() > cover.graph().edge_count()) {
    throw ContractViolation("coalition {" + s.key() +
                            "} is not a nonempty set of players");
  }
  std::unordered_map<VertexId, std::int64_t> load;
  s.for_each([&](EdgeId e) {
    if (!cover.is_free_rider(e)) ++load[cover.owner(e)];
  });
  std::vector<Rational> values;
  values.reserve(s.size());
  s.for_each([&](EdgeId e) {
    if (cover.is_free_rider(e)) {
      values.emplace_back(cover.accompanied(e, s) ? 0 : 1);
    } else {
      values.emplace_back(1, load.at(cover.owner(e)));
    }
  });
  return CostAllocation(s, std::move(values));
}

AllocationScheme construct_pmas(std::shared_ptr<const Graph> g) {
  auto classification =
      std::make_shared<const Classification>(classify_components(g));
  const std::size_t players = g->edge_count();
  return AllocationScheme::from_rule(
      players, [classification](const Coalition& s) {
        return pmas_allocation(classification->cover, s);
      });
}

AllocationScheme construct_pmas(const Graph& g) {
  return construct_pmas(std::make_shared<const Graph>(g));
}

// ---------------------------------------------------------------------------

std::string Violation::describe() const {
  if (kind == Kind::kEfficiency) {
    return "efficiency fails on {" + coalition.key() + "}: allocated " +
           to_string(lhs) + ", gamma = " + to_string(rhs);
  }
  return "monotonicity fails for edge " + std::to_string(*edge) + ": a[{" +
         coalition.key() + "}] = " + to_string(lhs) + " < a[{" +
         superset->key() + "}] = " + to_string(rhs);
}

PmasReport verify_pmas(const VertexCoverGame& game, const AllocationScheme& scheme,
                       const VerifyOptions& options) {
  game.require_players_at_most(game.limits().max_exhaustive_edges,
                               "PMAS verification");
  const std::size_t n = game.players();
  if (scheme.players() != n) {
    throw MalformedScheme("scheme covers " + std::to_string(scheme.players()) +
                          " players, the game has " + std::to_string(n));
  }
  const auto& gamma = game.gamma_table();
  using Mask = Coalition::Mask;
  const Mask count = Mask{1} << n;

  std::vector<Mask> order;
  order.reserve(count - 1);
  for (Mask m = 1; m < count; ++m) order.push_back(m);
  // Same order as Coalition's operator<.
  std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
    const int pa = __builtin_popcountll(a);
    const int pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    const Mask diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;
  });

  // Dense copy: values[m * n + i] = a[S_m, i].
  std::vector<Rational> values(static_cast<std::size_t>(count) * n);
  for (Mask m : order) {
    const CostAllocation alloc = scheme.at(Coalition::from_mask(m));
    const auto& members = alloc.members();
    for (std::size_t k = 0; k < members.size(); ++k) {
      values[static_cast<std::size_t>(m) * n + members[k]] = alloc.values()[k];
    }
  }

  PmasReport report;
  auto record = [&](Violation v) {
    report.ok = false;
    report.violations.push_back(std::move(v));
    return !options.collect_all ||
           report.violations.size() >= options.max_violations;
  };

  for (Mask m : order) {
    Rational total(0);
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      total += values[static_cast<std::size_t>(m) * n +
                      static_cast<std::size_t>(__builtin_ctzll(rest))];
    }
    const Rational want(static_cast<std::int64_t>(gamma[m]));
    if (total != want) {
      Violation v;
      v.kind = Violation::Kind::kEfficiency;
      v.coalition = Coalition::from_mask(m);
      v.lhs = total;
      v.rhs = want;
      if (record(std::move(v))) return report;
    }
  }
  for (Mask m : order) {
    for (std::size_t j = 0; j < n; ++j) {
      const Mask bit = Mask{1} << j;
      if ((m & bit) != 0) continue;
      const Mask t = m | bit;
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const auto i = static_cast<std::size_t>(__builtin_ctzll(rest));
        const Rational& small = values[static_cast<std::size_t>(m) * n + i];
        const Rational& large = values[static_cast<std::size_t>(t) * n + i];
        if (small < large) {
          Violation v;
          v.kind = Violation::Kind::kMonotonicity;
          v.coalition = Coalition::from_mask(m);
          v.superset = Coalition::from_mask(t);
          v.edge = i;
          v.lhs = small;
          v.rhs = large;
          if (record(std::move(v))) return report;
        }
      }
    }
  }
  return report;
}

std::vector<ChainStep> obstruction_chain(const Graph& g, Pattern pattern,
                                         const std::vector<VertexId>& witness) {
  auto edge = [&](VertexId a, VertexId b) {
    const auto e = g.edge_between(a, b);
    if (!e) {
      throw ContractViolation("witness vertices '" + g.label(a) + "' and '" +
                              g.label(b) + "' are not adjacent");
    }
    return *e;
  };
  if (pattern == Pattern::kK3) {
    if (witness.size() != 3) throw ContractViolation("K3 witness needs 3 vertices");
    const EdgeId e1 = edge(witness[0], witness[1]);
    const EdgeId e2 = edge(witness[1], witness[2]);
    const EdgeId e3 = edge(witness[2], witness[0]);
    const Coalition all{e1, e2, e3};
    const Coalition p12{e1, e2}, p23{e2, e3}, p13{e1, e3};
    return {{all, p12, e1}, {all, p12, e2}, {all, p23, e3},
            {all, p13, e1}, {all, p23, e2}, {all, p13, e3}};
  }
  if (pattern == Pattern::kC4 || pattern == Pattern::kP5) {
    const std::size_t need = pattern == Pattern::kC4 ? 4 : 5;
    if (witness.size() != need) {
      throw ContractViolation(std::string(pattern_name(pattern)) +
                              " witness has the wrong length");
    }
    const EdgeId e1 = edge(witness[0], witness[1]);
    const EdgeId e2 = edge(witness[1], witness[2]);
    const EdgeId e3 = edge(witness[2], witness[3]);
    const EdgeId e4 = pattern == Pattern::kC4 ? edge(witness[3], witness[0])
                                              : edge(witness[3], witness[4]);
    const Coalition t123{e1, e2, e3}, t234{e2, e3, e4};
    const Coalition p12{e1, e2}, p23{e2, e3}, p34{e3, e4};
    return {{t123, p12, e1}, {t123, p12, e2}, {t123, p23, e3},
            {t234, p23, e2}, {t234, p34, e3}, {t234, p34, e4}};
  }
  throw ContractViolation("no obstruction chain for pattern " +
                          std::string(pattern_name(pattern)));
}

ChainTrace evaluate_chain(const AllocationScheme& scheme,
                          const std::vector<ChainStep>& chain) {
  ChainTrace trace;
  for (const ChainStep& step : chain) {
    const Rational large = scheme.at(step.larger).at(step.edge);
    const Rational small = scheme.at(step.smaller).at(step.edge);
    trace.upper += large;
    trace.lower += small;
    if (large > small) trace.violated.push_back(step);
  }
  return trace;
}

// ---------------------------------------------------------------------------

namespace {

void require_indexed_by(const Coalition& s, const CostAllocation& x) {
  if (!(x.coalition() == s)) {
    throw ContractViolation("allocation is indexed by {" + x.coalition().key() +
                            "}, expected {" + s.key() + "}");
  }
}

Rational load_at(const Graph& g, VertexId v, const CostAllocation& x) {
  Rational total(0);
  for (EdgeId e : g.incident_edges(v)) {
    if (x.coalition().contains(e)) total += x.at(e);
  }
  return total;
}

}  // namespace

bool check_dual_feasible(const Graph& g, const Coalition& s,
                         const CostAllocation& x) {
  require_indexed_by(s, x);
  for (const Rational& v : x.values()) {
    if (v < Rational(0)) return false;
  }
  const SubgraphView view(g, s);
  return std::all_of(view.vertices().begin(), view.vertices().end(),
                     [&](VertexId v) { return load_at(g, v, x) <= Rational(1); });
}

bool check_dual_optimal(const VertexCoverGame& game, const Coalition& s,
                        const CostAllocation& x) {
  require_indexed_by(s, x);
  if (!is_bipartite(game.graph(), s)) {
    throw ContractViolation("G[{" + s.key() +
                            "}] is not bipartite; DP optimum may exceed tau");
  }
  return check_dual_feasible(game.graph(), s, x) &&
         x.sum() == Rational(static_cast<std::int64_t>(game.gamma(s)));
}

bool check_pi_star(const Graph& g, const Coalition& s, const CostAllocation& x,
                   const CoverSystem& cover) {
  if (!check_dual_feasible(g, s, x)) return false;
  for (VertexId v : cover.select(s)) {
    if (load_at(g, v, x) != Rational(1)) return false;
  }
  for (EdgeId e : cover.free_riders()) {
    if (s.contains(e) && cover.accompanied(e, s) && x.at(e) != Rational(0)) return false;
  }
  return true;
}

}  // namespace vcpmas
