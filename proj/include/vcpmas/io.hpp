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

// JSON documents:
//
//   allocation   {"0": "1/1", "1": "0/1", "2": "1/1"}
//   scheme       {"0": {"0": "1/1"}, "1": {...}, "0,1": {...}, ...}
//   preferences  {"b": [0, 1], "c": [2, 1]}
//
// Coalition keys are sorted comma-joined edge indices; scheme keys appear by
// coalition size, then lexicographically. Rationals are "p/q" strings.

#ifndef VCPMAS_IO_HPP
#define VCPMAS_IO_HPP

#include <memory>
#include <string>

#include <json.hpp>

#include "vcpmas/allocation.hpp"
#include "vcpmas/graph.hpp"
#include "vcpmas/preference.hpp"

namespace vcpmas {

using ordered_json = nlohmann::ordered_json;

ordered_json allocation_to_json(const CostAllocation& alloc);
CostAllocation allocation_from_json(const Coalition& s, const nlohmann::json& doc);

/// Materializes rule-backed schemes (cap max_players).
ordered_json scheme_to_json(const AllocationScheme& scheme,
                            std::size_t max_players = 16);
/// Table-backed scheme. Throws FormatError on malformed keys or values.
AllocationScheme scheme_from_json(const nlohmann::json& doc, std::size_t players);

ordered_json preferences_to_json(const PreferenceSystem& ps);
PreferenceSystem preferences_from_json(const nlohmann::json& doc,
                                       std::shared_ptr<const Graph> g);

/// Reads and parses a JSON file; throws FormatError with the path.
nlohmann::json load_json(const std::string& path);

}  // namespace vcpmas

#endif  // VCPMAS_IO_HPP
