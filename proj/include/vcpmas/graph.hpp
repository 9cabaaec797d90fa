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

#ifndef VCPMAS_GRAPH_HPP
#define VCPMAS_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vcpmas/coalition.hpp"

namespace vcpmas {

using VertexId = std::size_t;
using LabeledEdge = std::pair<std::string, std::string>;

/// Finite simple undirected graph with string-labeled vertices. Edge i is
/// player i of the vertex cover game on the graph.
///
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Isolated vertices are allowed. Throws FormatError on a self-loop, a
  /// duplicate edge, a duplicate vertex label or an unknown endpoint.
  Graph(std::vector<std::string> vertices, const std::vector<LabeledEdge>& edges);

  /// Vertex set is the endpoints in order of first appearance.
  static Graph from_edges(const std::vector<LabeledEdge>& edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  Coalition players() const { return Coalition::all(edge_count()); }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  const std::pair<VertexId, VertexId>& endpoints(EdgeId e) const {
    return edges_.at(e);
  }
  VertexId other_end(EdgeId e, VertexId v) const;
  bool incident(EdgeId e, VertexId v) const;
  bool adjacent_edges(EdgeId a, EdgeId b) const;

  /// delta(v), ascending edge index.
  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    return incidence_.at(v);
  }
  std::size_t degree(VertexId v) const { return incidence_.at(v).size(); }
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  /// Position of v among all vertices sorted by label. Every deterministic
  /// tie-break in the library compares ranks.
  std::size_t rank(VertexId v) const { return rank_.at(v); }
  const std::vector<VertexId>& by_label() const noexcept { return by_label_; }

 private:
  void index();

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<std::size_t> rank_;
  std::vector<VertexId> by_label_;
};

/// Edge-induced subgraph G[S]. Holds a reference to the graph, which must
/// outlive the view.
class SubgraphView {
 public:
  SubgraphView(const Graph& g, Coalition s);

  const Graph& graph() const noexcept { return *graph_; }
  const Coalition& coalition() const noexcept { return coalition_; }
  /// V_S in label order.
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  /// delta_S(v), ascending.
  std::vector<EdgeId> incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const;

 private:
  const Graph* graph_;
  Coalition coalition_;
  std::vector<VertexId> vertices_;
};

/// Parses the edge-list format: one edge per line as two whitespace-separated
/// labels, '#' starts a comment, blank lines are skipped. Edge indices follow
/// line order.
Graph parse_graph(std::string_view text);
/// Reads the file and parses it.
Graph load_graph(const std::string& path);
/// Inverse of parse_graph for graphs without isolated vertices.
std::string format_graph(const Graph& g);

/// Edge sets of the connected components of G[s], ordered by smallest edge.
std::vector<Coalition> components(const Graph& g, const Coalition& s);
std::vector<Coalition> components(const Graph& g);

/// Longest shortest path in G[comp]. Throws ContractViolation unless comp is
/// nonempty and connected.
std::size_t diameter(const Graph& g, const Coalition& comp);

bool is_bipartite(const Graph& g);
bool is_bipartite(const Graph& g, const Coalition& s);

/// True when G[comp] is a tree (comp must be one component).
bool is_tree(const Graph& g, const Coalition& comp);

struct OracleLimits {
  /// Largest |V_S| the exact vertex cover search accepts for components that
  /// are not trees of diameter at most 3.
  std::size_t max_cover_vertices = 24;
};

struct VertexCover {
  std::size_t size = 0;
  /// Lexicographically smallest minimum cover, in label order.
  std::vector<VertexId> vertices;
};

/// tau(G[s]) with a witness. Components that are trees of diameter at most 3
/// are solved structurally; anything else goes to branch and bound, capped
/// by limits. Throws CapExceeded past the cap.
VertexCover vertex_cover_number(const Graph& g, const Coalition& s,
                                const OracleLimits& limits = {});
/// Same value without building the witness.
std::size_t vertex_cover_size(const Graph& g, const Coalition& s,
                              const OracleLimits& limits = {});

struct Matching {
  std::size_t size = 0;
  /// Lexicographically smallest maximum matching by edge index.
  std::vector<EdgeId> edges;
};

/// nu(G[s]) with a witness. Augmenting paths on bipartite subgraphs, Edmonds
/// blossom contraction otherwise.
Matching matching_number(const Graph& g, const Coalition& s);
std::size_t matching_size(const Graph& g, const Coalition& s);

enum class Pattern { kK3, kC4, kP4, kP5 };

std::string_view pattern_name(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);

/// Looks for `pattern` as a (not necessarily induced) subgraph. The witness
/// lists the vertices in path/cycle order and is the lexicographically
/// smallest such sequence by label.
std::optional<std::vector<VertexId>> find_forbidden_subgraph(const Graph& g,
                                                             Pattern pattern);

}  // namespace vcpmas

#endif  // VCPMAS_GRAPH_HPP
