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

#include "vcpmas/io.hpp"

#include <algorithm>
#include <fstream>

#include "vcpmas/errors.hpp"

namespace vcpmas {

namespace {

Rational rational_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw FormatError(where + ": payment must be a \"p/q\" string");
}

}  // namespace

ordered_json allocation_to_json(const CostAllocation& alloc) {
  ordered_json out = ordered_json::object();
  for (std::size_t k = 0; k < alloc.members().size(); ++k) {
    out[std::to_string(alloc.members()[k])] = to_string(alloc.values()[k]);
  }
  return out;
}

CostAllocation allocation_from_json(const Coalition& s, const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw FormatError("allocation for {" + s.key() + "} must be an object");
  }
  std::map<EdgeId, Rational> entries;
  for (const auto& [key, value] : doc.items()) {
    const Coalition single = Coalition::parse(key);
    if (single.size() != 1) {
      throw FormatError("allocation key '" + key + "' is not one edge index");
    }
    const EdgeId e = single.members().front();
    if (!s.contains(e)) {
      throw MalformedScheme("allocation for {" + s.key() + "} pays edge " + key +
                            ", which is not a member");
    }
    entries[e] = rational_from_json(value, "{" + s.key() + "}[" + key + "]");
  }
  if (entries.size() != s.size()) {
    throw MalformedScheme("allocation for {" + s.key() + "} has " +
                          std::to_string(entries.size()) + " entries, expected " +
                          std::to_string(s.size()));
  }
  std::vector<Rational> values;
  for (const auto& [e, v] : entries) values.push_back(v);
  return CostAllocation(s, std::move(values));
}

ordered_json scheme_to_json(const AllocationScheme& scheme,
                            std::size_t max_players) {
  const AllocationScheme table = scheme.materialize(max_players);
  ordered_json out = ordered_json::object();
  for (const auto& [coalition, alloc] : table.table()) {
    out[coalition.key()] = allocation_to_json(alloc);
  }
  return out;
}

AllocationScheme scheme_from_json(const nlohmann::json& doc, std::size_t players) {
  if (!doc.is_object()) throw FormatError("scheme document must be a JSON object");
  AllocationScheme::Table table;
  for (const auto& [key, value] : doc.items()) {
    const Coalition s = Coalition::parse(key);
    if (s.empty()) throw FormatError("scheme has an empty coalition key");
    if (s.bound() > players) {
      throw MalformedScheme("scheme coalition {" + key + "} names an edge beyond " +
                            std::to_string(players - 1));
    }
    if (!table.emplace(s, allocation_from_json(s, value)).second) {
      throw FormatError("coalition {" + key + "} appears twice");
    }
  }
  return AllocationScheme::from_table(players, std::move(table));
}

ordered_json preferences_to_json(const PreferenceSystem& ps) {
  const Graph& g = ps.graph();
  std::vector<VertexId> keys;
  for (const auto& [v, order] : ps.orders()) keys.push_back(v);
  std::sort(keys.begin(), keys.end(),
            [&](VertexId a, VertexId b) { return g.rank(a) < g.rank(b); });
  ordered_json out = ordered_json::object();
  for (VertexId v : keys) out[g.label(v)] = ps.orders().at(v);
  return out;
}

PreferenceSystem preferences_from_json(const nlohmann::json& doc,
                                       std::shared_ptr<const Graph> g) {
  if (!doc.is_object()) {
    throw FormatError("preference document must be a JSON object");
  }
  PreferenceSystem::Orders orders;
  for (const auto& [label, list] : doc.items()) {
    const auto v = g->find(label);
    if (!v) throw FormatError("preference for unknown vertex '" + label + "'");
    if (!list.is_array()) {
      throw FormatError("preference for '" + label + "' must be a list of edges");
    }
    std::vector<EdgeId> order;
    for (const auto& e : list) {
      if (!e.is_number_unsigned()) {
        throw FormatError("preference for '" + label +
                          "' lists a non-index value");
      }
      order.push_back(e.get<EdgeId>());
    }
    orders.emplace(*v, std::move(order));
  }
  try {
    return PreferenceSystem(std::move(g), std::move(orders));
  } catch (const ContractViolation& e) {
    throw FormatError(e.what());
  }
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace vcpmas
