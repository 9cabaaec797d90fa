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

#include "vcpmas/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "vcpmas/errors.hpp"

namespace vcpmas {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<LabeledEdge>& edges)
    : labels_(std::move(vertices)) {
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (!ids_.emplace(labels_[v], v).second) {
      throw FormatError("duplicate vertex label '" + labels_[v] + "'");
    }
  }
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& [a, b] = edges[k];
    const auto u = find(a);
    const auto v = find(b);
    if (!u || !v) {
      throw FormatError("edge " + std::to_string(k) + " has an unknown endpoint");
    }
    if (*u == *v) {
      throw FormatError("edge " + std::to_string(k) + " is a self-loop on '" + a +
                        "'");
    }
    if (!seen.emplace(std::min(*u, *v), std::max(*u, *v)).second) {
      throw FormatError("edge " + std::to_string(k) + " duplicates {" + a + "," +
                        b + "}");
    }
    edges_.emplace_back(*u, *v);
  }
  index();
}

Graph Graph::from_edges(const std::vector<LabeledEdge>& edges) {
  std::vector<std::string> vertices;
  std::set<std::string> seen;
  for (const auto& [a, b] : edges) {
    if (seen.insert(a).second) vertices.push_back(a);
    if (seen.insert(b).second) vertices.push_back(b);
  }
  return Graph(std::move(vertices), edges);
}

void Graph::index() {
  incidence_.assign(labels_.size(), {});
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    incidence_[edges_[e].first].push_back(e);
    incidence_[edges_[e].second].push_back(e);
  }
  by_label_.resize(labels_.size());
  std::iota(by_label_.begin(), by_label_.end(), VertexId{0});
  std::sort(by_label_.begin(), by_label_.end(),
            [&](VertexId a, VertexId b) { return labels_[a] < labels_[b]; });
  rank_.resize(labels_.size());
  for (std::size_t r = 0; r < by_label_.size(); ++r) rank_[by_label_[r]] = r;
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  const auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
  const auto& [a, b] = edges_.at(e);
  if (a == v) return b;
  if (b == v) return a;
  throw ContractViolation("edge " + std::to_string(e) + " is not incident to '" +
                          labels_.at(v) + "'");
}

bool Graph::incident(EdgeId e, VertexId v) const {
  const auto& [a, b] = edges_.at(e);
  return a == v || b == v;
}

bool Graph::adjacent_edges(EdgeId a, EdgeId b) const {
  if (a == b) return false;
  const auto& [u, v] = edges_.at(a);
  return incident(b, u) || incident(b, v);
}

std::optional<EdgeId> Graph::edge_between(VertexId u, VertexId v) const {
  const auto& inc = incidence_.at(u);
  for (EdgeId e : inc) {
    if (other_end(e, u) == v) return e;
  }
  return std::nullopt;
}

SubgraphView::SubgraphView(const Graph& g, Coalition s)
    : graph_(&g), coalition_(std::move(s)) {
  if (coalition_.bound() > g.edge_count()) {
    throw ContractViolation("coalition {" + coalition_.key() +
                            "} names edges outside the graph");
  }
  std::vector<bool> seen(g.vertex_count(), false);
  coalition_.for_each([&](EdgeId e) {
    seen[g.endpoints(e).first] = true;
    seen[g.endpoints(e).second] = true;
  });
  for (VertexId v : g.by_label()) {
    if (seen[v]) vertices_.push_back(v);
  }
}

std::vector<EdgeId> SubgraphView::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e : graph_->incident_edges(v)) {
    if (coalition_.contains(e)) out.push_back(e);
  }
  return out;
}

std::size_t SubgraphView::degree(VertexId v) const {
  std::size_t d = 0;
  for (EdgeId e : graph_->incident_edges(v)) d += coalition_.contains(e) ? 1 : 0;
  return d;
}

Graph parse_graph(std::string_view text) {
  std::vector<LabeledEdge> edges;
  std::map<std::pair<std::string, std::string>, std::size_t> first_line;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) {
      if (tok.front() == '#') break;
      tokens.push_back(tok);
    }
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw FormatError("expected two vertex labels, found " +
                            std::to_string(tokens.size()),
                        lineno);
    }
    if (tokens[0] == tokens[1]) {
      throw FormatError("self-loop on '" + tokens[0] + "'", lineno);
    }
    const auto [it, fresh] = first_line.emplace(
        std::minmax(tokens[0], tokens[1]), lineno);
    if (!fresh) {
      throw FormatError("duplicate edge {" + tokens[0] + "," + tokens[1] +
                            "} (first seen on line " +
                            std::to_string(it->second) + ")",
                        lineno);
    }
    edges.emplace_back(tokens[0], tokens[1]);
  }
  if (edges.empty()) throw FormatError("empty graph has no players");
  return Graph::from_edges(edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const FormatError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::string out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.endpoints(e);
    out += g.label(u) + " " + g.label(v) + "\n";
  }
  return out;
}

namespace {

VertexId find_root(std::vector<VertexId>& parent, VertexId v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

std::vector<Coalition> components(const Graph& g, const Coalition& s) {
  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  s.for_each([&](EdgeId e) {
    const auto& [u, v] = g.endpoints(e);
    parent[find_root(parent, u)] = find_root(parent, v);
  });
  // Edges are visited in increasing order, so first-seen roots are already
  // ordered by smallest edge.
  std::map<VertexId, std::size_t> slot;
  std::vector<Coalition> out;
  s.for_each([&](EdgeId e) {
    const VertexId r = find_root(parent, g.endpoints(e).first);
    auto [it, fresh] = slot.emplace(r, out.size());
    if (fresh) out.emplace_back();
    out[it->second].insert(e);
  });
  return out;
}

std::vector<Coalition> components(const Graph& g) {
  return components(g, g.players());
}

std::size_t diameter(const Graph& g, const Coalition& comp) {
  const SubgraphView view(g, comp);
  if (view.vertices().empty()) {
    throw ContractViolation("diameter of an empty edge set is undefined");
  }
  std::size_t best = 0;
  std::vector<std::size_t> dist(g.vertex_count());
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  for (VertexId src : view.vertices()) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[src] = 0;
    std::deque<VertexId> queue{src};
    std::size_t reached = 1;
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident_edges(u)) {
        if (!comp.contains(e)) continue;
        const VertexId w = g.other_end(e, u);
        if (dist[w] != kUnseen) continue;
        dist[w] = dist[u] + 1;
        best = std::max(best, dist[w]);
        ++reached;
        queue.push_back(w);
      }
    }
    if (reached != view.vertices().size()) {
      throw ContractViolation("edge set {" + comp.key() + "} is not connected");
    }
  }
  return best;
}

bool is_bipartite(const Graph& g, const Coalition& s) {
  std::vector<int> color(g.vertex_count(), -1);
  const SubgraphView view(g, s);
  for (VertexId start : view.vertices()) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident_edges(u)) {
        if (!s.contains(e)) continue;
        const VertexId w = g.other_end(e, u);
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) { return is_bipartite(g, g.players()); }

bool is_tree(const Graph& g, const Coalition& comp) {
  if (comp.empty()) return false;
  const SubgraphView view(g, comp);
  return comp.size() + 1 == view.vertices().size() &&
         components(g, comp).size() == 1;
}

}  // namespace vcpmas
