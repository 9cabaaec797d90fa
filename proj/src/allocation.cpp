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

#include "vcpmas/allocation.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "vcpmas/errors.hpp"

namespace vcpmas {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FormatError("invalid rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

CostAllocation::CostAllocation(Coalition coalition, std::vector<Rational> values)
    : coalition_(std::move(coalition)),
      members_(coalition_.members()),
      values_(std::move(values)) {
  if (values_.size() != members_.size()) {
    throw MalformedScheme("allocation for {" + coalition_.key() + "} has " +
                          std::to_string(values_.size()) + " entries, expected " +
                          std::to_string(members_.size()));
  }
}

const Rational& CostAllocation::at(EdgeId i) const {
  const auto it = std::lower_bound(members_.begin(), members_.end(), i);
  if (it == members_.end() || *it != i) {
    throw ContractViolation("edge " + std::to_string(i) +
                            " is not a member of {" + coalition_.key() + "}");
  }
  return values_[static_cast<std::size_t>(it - members_.begin())];
}

Rational CostAllocation::sum() const {
  Rational total(0);
  for (const Rational& v : values_) total += v;
  return total;
}

bool CostAllocation::is_integral() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rational& v) { return v.denominator() == 1; });
}

AllocationScheme AllocationScheme::from_rule(std::size_t players, Rule rule) {
  AllocationScheme s;
  s.players_ = players;
  s.rule_ = std::move(rule);
  return s;
}

AllocationScheme AllocationScheme::from_table(std::size_t players, Table table) {
  for (const auto& [coalition, alloc] : table) {
    if (!(alloc.coalition() == coalition)) {
      throw MalformedScheme("entry keyed {" + coalition.key() +
                            "} is indexed by {" + alloc.coalition().key() + "}");
    }
    if (coalition.empty() || coalition.bound() > players) {
      throw MalformedScheme("coalition {" + coalition.key() +
                            "} is not a nonempty set of the " +
                            std::to_string(players) + " players");
    }
  }
  AllocationScheme s;
  s.players_ = players;
  s.table_ = std::make_shared<const Table>(std::move(table));
  return s;
}

CostAllocation AllocationScheme::at(const Coalition& s) const {
  if (table_ == nullptr) {
    CostAllocation alloc = rule_(s);
    if (!(alloc.coalition() == s)) {
      throw MalformedScheme("rule returned an allocation for {" +
                            alloc.coalition().key() + "} when asked for {" +
                            s.key() + "}");
    }
    return alloc;
  }
  const auto it = table_->find(s);
  if (it == table_->end()) {
    throw MalformedScheme("scheme has no allocation for coalition {" + s.key() +
                          "}");
  }
  return it->second;
}

AllocationScheme AllocationScheme::materialize(std::size_t max_players) const {
  if (table_ != nullptr) return *this;
  if (players_ > max_players || players_ >= 64) {
    throw CapExceeded("cannot materialize a scheme over " +
                      std::to_string(players_) + " players (cap " +
                      std::to_string(max_players) + ")");
  }
  Table table;
  const Coalition::Mask last = (Coalition::Mask{1} << players_) - 1;
  for (Coalition::Mask m = 1; m <= last && last != 0; ++m) {
    Coalition s = Coalition::from_mask(m);
    table.emplace(s, at(s));
  }
  return from_table(players_, std::move(table));
}

const AllocationScheme::Table& AllocationScheme::table() const {
  if (table_ == nullptr) {
    throw ContractViolation("scheme is rule-backed; call materialize() first");
  }
  return *table_;
}

}  // namespace vcpmas
