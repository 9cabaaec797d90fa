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

#ifndef VCPMAS_ALLOCATION_HPP
#define VCPMAS_ALLOCATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "vcpmas/coalition.hpp"

namespace vcpmas {

/// Payments are exact. boost::rational keeps values in lowest terms.
/// Compare against Rational values only: Boost 1.74's mixed rational/int
/// comparisons recurse without end.
using Rational = boost::rational<std::int64_t>;

/// "p/q", always with an explicit denominator ("1/1", "0/1").
std::string to_string(const Rational& r);
/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

/// Per-edge payments for one coalition. values()[k] belongs to the k-th
/// smallest member of coalition().
class CostAllocation {
 public:
  CostAllocation() = default;
  /// Throws MalformedScheme when values.size() != coalition.size().
  CostAllocation(Coalition coalition, std::vector<Rational> values);

  const Coalition& coalition() const noexcept { return coalition_; }
  const std::vector<Rational>& values() const noexcept { return values_; }
  const std::vector<EdgeId>& members() const noexcept { return members_; }

  /// Throws ContractViolation when i is not a member.
  const Rational& at(EdgeId i) const;
  Rational sum() const;
  bool is_integral() const;

  friend bool operator==(const CostAllocation& a, const CostAllocation& b) {
    return a.coalition_ == b.coalition_ && a.values_ == b.values_;
  }

 private:
  Coalition coalition_;
  std::vector<EdgeId> members_;
  std::vector<Rational> values_;
};

/// A cost allocation for every nonempty coalition of an n-player game.
///
/// Two representations share one interface: a rule evaluated on demand, or a
/// materialized table. Rule-backed schemes are the default since a full table
/// has 2^n - 1 entries.
class AllocationScheme {
 public:
  using Rule = std::function<CostAllocation(const Coalition&)>;
  using Table = std::map<Coalition, CostAllocation>;

  static AllocationScheme from_rule(std::size_t players, Rule rule);
  /// Entries are validated for index sets only; completeness is checked
  /// lazily by at() and exhaustively by verify_pmas.
  static AllocationScheme from_table(std::size_t players, Table table);

  std::size_t players() const noexcept { return players_; }
  bool is_materialized() const noexcept { return table_ != nullptr; }

  /// Throws MalformedScheme when the coalition has no entry or the entry
  /// is indexed by a different set.
  CostAllocation at(const Coalition& s) const;

  /// Full table. Throws CapExceeded when players() > max_players.
  AllocationScheme materialize(std::size_t max_players = 16) const;

  /// Only valid for materialized schemes.
  const Table& table() const;

 private:
  std::size_t players_ = 0;
  Rule rule_;
  std::shared_ptr<const Table> table_;
};

}  // namespace vcpmas

#endif  // VCPMAS_ALLOCATION_HPP
