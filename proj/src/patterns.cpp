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

#include <algorithm>
#include <vector>

#include "vcpmas/graph.hpp"

namespace vcpmas {

std::string_view pattern_name(Pattern p) {
  switch (p) {
    case Pattern::kK3: return "K3";
    case Pattern::kC4: return "C4";
    case Pattern::kP4: return "P4";
    case Pattern::kP5: return "P5";
  }
  return "?";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (Pattern p : {Pattern::kK3, Pattern::kC4, Pattern::kP4, Pattern::kP5}) {
    if (pattern_name(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

// Depth-first search for a simple path on `length` vertices, optionally
// closed into a cycle. Starts and neighbours are tried in label order, so the
// first hit is the lexicographically smallest vertex sequence.
class PathSearch {
 public:
  PathSearch(const Graph& g, std::size_t length, bool closed)
      : g_(g), length_(length), closed_(closed), on_path_(g.vertex_count(), false) {
    neighbours_.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      for (EdgeId e : g.incident_edges(v)) {
        neighbours_[v].push_back(g.other_end(e, v));
      }
      std::sort(neighbours_[v].begin(), neighbours_[v].end(),
                [&](VertexId a, VertexId b) { return g.rank(a) < g.rank(b); });
    }
  }

  std::optional<std::vector<VertexId>> run() {
    for (VertexId start : g_.by_label()) {
      if (extend(start)) return path_;
    }
    return std::nullopt;
  }

 private:
  bool extend(VertexId v) {
    path_.push_back(v);
    on_path_[v] = true;
    if (path_.size() == length_) {
      if (!closed_ || g_.edge_between(v, path_.front())) return true;
    } else {
      for (VertexId w : neighbours_[v]) {
        if (!on_path_[w] && extend(w)) return true;
      }
    }
    on_path_[v] = false;
    path_.pop_back();
    return false;
  }

  const Graph& g_;
  std::size_t length_;
  bool closed_;
  std::vector<std::vector<VertexId>> neighbours_;
  std::vector<bool> on_path_;
  std::vector<VertexId> path_;
};

}  // namespace

std::optional<std::vector<VertexId>> find_forbidden_subgraph(const Graph& g,
                                                             Pattern pattern) {
  switch (pattern) {
    case Pattern::kK3: return PathSearch(g, 3, true).run();
    case Pattern::kC4: return PathSearch(g, 4, true).run();
    case Pattern::kP4: return PathSearch(g, 4, false).run();
    case Pattern::kP5: return PathSearch(g, 5, false).run();
  }
  return std::nullopt;
}

}  // namespace vcpmas
