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

#include "vcpmas/coalition.hpp"

#include <algorithm>
#include <charconv>

#include "vcpmas/errors.hpp"

namespace vcpmas {

Coalition::Coalition(std::initializer_list<EdgeId> members) {
  for (EdgeId i : members) insert(i);
}

Coalition::Coalition(const std::vector<EdgeId>& members) {
  for (EdgeId i : members) insert(i);
}

Coalition Coalition::from_mask(Mask mask) {
  Coalition c;
  if (mask != 0) c.words_.push_back(mask);
  return c;
}

Coalition Coalition::all(std::size_t n) {
  Coalition c;
  c.words_.assign((n + 63) / 64, ~Mask{0});
  if (n % 64 != 0) c.words_.back() = (Mask{1} << (n % 64)) - 1;
  return c;
}

bool Coalition::contains(EdgeId i) const noexcept {
  const std::size_t w = i / 64;
  return w < words_.size() && ((words_[w] >> (i % 64)) & 1U) != 0;
}

std::size_t Coalition::size() const noexcept {
  std::size_t n = 0;
  for (Mask w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

std::size_t Coalition::bound() const noexcept {
  if (words_.empty()) return 0;
  const Mask top = words_.back();
  return (words_.size() - 1) * 64 + 64 -
         static_cast<std::size_t>(__builtin_clzll(top));
}

void Coalition::insert(EdgeId i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= Mask{1} << (i % 64);
}

void Coalition::erase(EdgeId i) {
  const std::size_t w = i / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(Mask{1} << (i % 64));
  trim();
}

Coalition Coalition::with(EdgeId i) const {
  Coalition c = *this;
  c.insert(i);
  return c;
}

Coalition Coalition::without(EdgeId i) const {
  Coalition c = *this;
  c.erase(i);
  return c;
}

std::vector<EdgeId> Coalition::members() const {
  std::vector<EdgeId> out;
  out.reserve(size());
  for_each([&](EdgeId i) { out.push_back(i); });
  return out;
}

Coalition::Mask Coalition::to_mask() const {
  if (words_.size() > 1) {
    throw ContractViolation("coalition has members beyond edge 63");
  }
  return words_.empty() ? 0 : words_[0];
}

bool Coalition::is_subset_of(const Coalition& other) const noexcept {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

Coalition Coalition::operator|(const Coalition& other) const {
  Coalition c = words_.size() >= other.words_.size() ? *this : other;
  const Coalition& o = words_.size() >= other.words_.size() ? other : *this;
  for (std::size_t w = 0; w < o.words_.size(); ++w) c.words_[w] |= o.words_[w];
  return c;
}

Coalition Coalition::operator&(const Coalition& other) const {
  Coalition c;
  c.words_.resize(std::min(words_.size(), other.words_.size()));
  for (std::size_t w = 0; w < c.words_.size(); ++w) {
    c.words_[w] = words_[w] & other.words_[w];
  }
  c.trim();
  return c;
}

Coalition Coalition::operator-(const Coalition& other) const {
  Coalition c = *this;
  for (std::size_t w = 0; w < std::min(c.words_.size(), other.words_.size());
       ++w) {
    c.words_[w] &= ~other.words_[w];
  }
  c.trim();
  return c;
}

std::string Coalition::key() const {
  std::string out;
  for_each([&](EdgeId i) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  });
  return out;
}

Coalition Coalition::parse(std::string_view text) {
  Coalition c;
  if (text.empty()) return c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    EdgeId value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw FormatError("invalid edge index '" + std::string(token) +
                        "' in coalition '" + std::string(text) + "'");
    }
    if (c.contains(value)) {
      throw FormatError("edge " + std::to_string(value) +
                        " listed twice in coalition '" + std::string(text) + "'");
    }
    c.insert(value);
    pos = comma + 1;
  }
  return c;
}

bool operator<(const Coalition& a, const Coalition& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  // Equal sizes: sorted member lists first differ at the smallest element of
  // the symmetric difference, and the set holding it is smaller.
  const std::size_t words = std::max(a.words_.size(), b.words_.size());
  for (std::size_t w = 0; w < words; ++w) {
    const Coalition::Mask x = w < a.words_.size() ? a.words_[w] : 0;
    const Coalition::Mask y = w < b.words_.size() ? b.words_[w] : 0;
    const Coalition::Mask diff = x ^ y;
    if (diff != 0) return (x & (diff & (~diff + 1))) != 0;
  }
  return false;
}

std::size_t Coalition::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Mask w : words_) {
    h ^= std::hash<Mask>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void Coalition::trim() noexcept {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace vcpmas
