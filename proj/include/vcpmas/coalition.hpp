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

#ifndef VCPMAS_COALITION_HPP
#define VCPMAS_COALITION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace vcpmas {

/// Players of a vertex cover game are edges, identified by their 0-based
/// index in the edge list.
using EdgeId = std::size_t;

/// A set of edge indices with bitset semantics.
///
/// Storage is a word vector with trailing zero words trimmed, so two
/// coalitions with the same members compare equal regardless of how they
/// were built. Ordering is by cardinality, then lexicographically by sorted
/// members: {0} < {1} < {0,1} < {0,2}.
class Coalition {
 public:
  using Mask = std::uint64_t;

  Coalition() = default;
  Coalition(std::initializer_list<EdgeId> members);
  explicit Coalition(const std::vector<EdgeId>& members);

  /// Members are the set bits of `mask`.
  static Coalition from_mask(Mask mask);
  /// {0, ..., n-1}.
  static Coalition all(std::size_t n);

  bool contains(EdgeId i) const noexcept;
  bool empty() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept;
  /// One past the largest member, 0 when empty.
  std::size_t bound() const noexcept;

  void insert(EdgeId i);
  void erase(EdgeId i);
  Coalition with(EdgeId i) const;
  Coalition without(EdgeId i) const;

  /// Members in increasing order.
  std::vector<EdgeId> members() const;
  /// Requires every member < 64.
  Mask to_mask() const;

  bool is_subset_of(const Coalition& other) const noexcept;
  Coalition operator|(const Coalition& other) const;
  Coalition operator&(const Coalition& other) const;
  Coalition operator-(const Coalition& other) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Mask bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// "0,2,3"; the empty coalition renders as "".
  std::string key() const;
  /// Inverse of key(); throws FormatError on malformed input.
  static Coalition parse(std::string_view text);

  friend bool operator==(const Coalition& a, const Coalition& b) noexcept {
    return a.words_ == b.words_;
  }
  friend bool operator<(const Coalition& a, const Coalition& b);

  std::size_t hash() const noexcept;

 private:
  void trim() noexcept;

  std::vector<Mask> words_;
};

}  // namespace vcpmas

template <>
struct std::hash<vcpmas::Coalition> {
  std::size_t operator()(const vcpmas::Coalition& c) const noexcept {
    return c.hash();
  }
};

#endif  // VCPMAS_COALITION_HPP
