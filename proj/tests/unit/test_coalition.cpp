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


#include <random>
#include <set>

#include <gtest/gtest.h>

#include "vcpmas/allocation.hpp"
#include "vcpmas/coalition.hpp"
#include "vcpmas/errors.hpp"
#include "vcpmas/io.hpp"
#include "vcpmas/pmas.hpp"
#include "generators.hpp"

namespace vcpmas {
namespace {

TEST(CoalitionTest, MembersAndKey) {
  const Coalition s{3, 0, 2};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.key(), "0,2,3");
  EXPECT_EQ(s.members(), (std::vector<EdgeId>{0, 2, 3}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.bound(), 4u);
  EXPECT_EQ(Coalition().key(), "");
  EXPECT_TRUE(Coalition().empty());
}

TEST(CoalitionTest, WideMembersTrimToEqual) {
  Coalition a{1, 130};
  a.erase(130);
  EXPECT_EQ(a, Coalition{1});
  EXPECT_EQ(a.hash(), Coalition{1}.hash());
  EXPECT_THROW((Coalition{1, 64}.to_mask()), ContractViolation);
  EXPECT_EQ((Coalition{0, 5}.to_mask()), 0x21u);
}

TEST(CoalitionTest, SetAlgebra) {
  const Coalition a{0, 1, 2}, b{2, 3};
  EXPECT_EQ(a | b, (Coalition{0, 1, 2, 3}));
  EXPECT_EQ(a & b, Coalition{2});
  EXPECT_EQ(a - b, (Coalition{0, 1}));
  EXPECT_TRUE((Coalition{0, 2}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
  EXPECT_EQ(a.without(1).with(7), (Coalition{0, 2, 7}));
}

TEST(CoalitionTest, OrderIsSizeThenLexicographic) {
  std::vector<Coalition> got;
  for (Coalition::Mask m = 1; m < 16; ++m) got.push_back(Coalition::from_mask(m));
  std::sort(got.begin(), got.end());
  std::vector<std::string> keys;
  for (const auto& c : got) keys.push_back(c.key());
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "0", "1", "2", "3", "0,1", "0,2", "0,3", "1,2", "1,3",
                      "2,3", "0,1,2", "0,1,3", "0,2,3", "1,2,3", "0,1,2,3"}));
}

TEST(CoalitionTest, OrderAgreesWithSortedMemberComparison) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    Coalition a, b;
    for (int k = 0; k < 5; ++k) {
      a.insert(gen::uniform(rng, 0, 140));
      b.insert(gen::uniform(rng, 0, 140));
    }
    if (gen::uniform(rng, 0, 1)) b.erase(b.members().back());
    const auto ma = a.members(), mb = b.members();
    const bool expect = ma.size() != mb.size() ? ma.size() < mb.size() : ma < mb;
    EXPECT_EQ(a < b, expect) << a.key() << " vs " << b.key();
  }
}

TEST(CoalitionTest, ParseRoundTripAndErrors) {
  EXPECT_EQ(Coalition::parse("0,2,3"), (Coalition{0, 2, 3}));
  EXPECT_EQ(Coalition::parse(" 3, 1 "), (Coalition{1, 3}));
  EXPECT_EQ(Coalition::parse(""), Coalition());
  EXPECT_THROW(Coalition::parse("1,,2"), FormatError);
  EXPECT_THROW(Coalition::parse("1,x"), FormatError);
  EXPECT_THROW(Coalition::parse("-1"), FormatError);
  EXPECT_THROW(Coalition::parse("1,1"), FormatError);
  for (Coalition::Mask m = 0; m < 64; ++m) {
    const auto c = Coalition::from_mask(m);
    EXPECT_EQ(Coalition::parse(c.key()), c);
  }
}

TEST(RationalTest, FormatAndParse) {
  EXPECT_EQ(to_string(Rational(1)), "1/1");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(to_string(Rational(2, 6)), "1/3");
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), FormatError);
  EXPECT_THROW(parse_rational("a/2"), FormatError);
  EXPECT_THROW(parse_rational(""), FormatError);
}

TEST(CostAllocationTest, IndexedByCoalition) {
  const CostAllocation a(Coalition{1, 4}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(a.at(4), Rational(1, 2));
  EXPECT_EQ(a.sum(), Rational(1));
  EXPECT_FALSE(a.is_integral());
  EXPECT_THROW(a.at(0), ContractViolation);
  EXPECT_THROW(CostAllocation(Coalition{1, 4}, {Rational(1)}), MalformedScheme);
}

TEST(AllocationSchemeTest, TableLookupAndMissingEntries) {
  AllocationScheme::Table t;
  t.emplace(Coalition{0}, CostAllocation(Coalition{0}, {Rational(1)}));
  const auto scheme = AllocationScheme::from_table(2, t);
  EXPECT_TRUE(scheme.is_materialized());
  EXPECT_EQ(scheme.at(Coalition{0}).at(0), Rational(1));
  EXPECT_THROW(scheme.at(Coalition{1}), MalformedScheme);
  AllocationScheme::Table bad;
  bad.emplace(Coalition{0}, CostAllocation(Coalition{1}, {Rational(1)}));
  EXPECT_THROW(AllocationScheme::from_table(2, bad), MalformedScheme);
}

TEST(AllocationSchemeTest, MaterializeMatchesRuleAndRespectsCap) {
  const auto rule = AllocationScheme::from_rule(3, [](const Coalition& s) {
    return CostAllocation(s, std::vector<Rational>(s.size(), Rational(1, s.size())));
  });
  EXPECT_FALSE(rule.is_materialized());
  const auto table = rule.materialize();
  EXPECT_EQ(table.table().size(), 7u);
  for (const auto& [s, a] : table.table()) EXPECT_EQ(a, rule.at(s));
  EXPECT_THROW(rule.materialize(2), CapExceeded);
  const auto wide = AllocationScheme::from_rule(17, [](const Coalition& s) {
    return CostAllocation(s, std::vector<Rational>(s.size(), Rational(0)));
  });
  EXPECT_THROW(wide.materialize(), CapExceeded);
}

TEST(JsonTest, AllocationAndSchemeFormat) {
  const auto g = std::make_shared<const Graph>(gen::path(3));
  const auto scheme = construct_pmas(g);
  EXPECT_EQ(allocation_to_json(scheme.at(g->players())).dump(),
            R"({"0":"1/1","1":"0/1","2":"1/1"})");
  const auto doc = scheme_to_json(scheme);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"0", "1", "2", "0,1", "0,2", "1,2", "0,1,2"}));
}

TEST(JsonTest, SchemeRoundTrip) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = std::make_shared<const Graph>(gen::random_pm_forest(rng, 8));
    const auto scheme = construct_pmas(g).materialize();
    const auto back = scheme_from_json(
        nlohmann::json::parse(scheme_to_json(scheme).dump()), g->edge_count());
    EXPECT_EQ(back.table(), scheme.table());
  }
}

TEST(JsonTest, SchemeErrors) {
  using nlohmann::json;
  EXPECT_THROW(scheme_from_json(json::array(), 2), FormatError);
  EXPECT_THROW(scheme_from_json(json::parse(R"({"0":{"0":"x"}})"), 2), FormatError);
  EXPECT_THROW(scheme_from_json(json::parse(R"({"0,1":{"0":"1/1"}})"), 2),
               MalformedScheme);
  EXPECT_THROW(scheme_from_json(json::parse(R"({"5":{"5":"1/1"}})"), 2),
               MalformedScheme);
  EXPECT_THROW(scheme_from_json(json::parse(R"({"0":{"1":"1/1"}})"), 2),
               MalformedScheme);
  EXPECT_THROW(scheme_from_json(json::parse(R"({"":{}})"), 2), FormatError);
}

}  // namespace
}  // namespace vcpmas
