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


#include <set>

#include <gtest/gtest.h>

#include "vcpmas/errors.hpp"
#include "vcpmas/io.hpp"
#include "vcpmas/preference.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace vcpmas {
namespace {

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

PreferenceSystem star_prefs(const GraphPtr& g, std::vector<EdgeId> order) {
  return PreferenceSystem(g, {{*g->find("a"), std::move(order)}});
}

/// Every preference system on g, free riders anywhere.
void for_each_preferences(const GraphPtr& g,
                          const std::function<void(const PreferenceSystem&)>& f) {
  std::vector<VertexId> vs;
  std::vector<std::vector<EdgeId>> orders;
  for (VertexId v = 0; v < g->vertex_count(); ++v) {
    if (g->degree(v) < 2) continue;
    vs.push_back(v);
    orders.push_back(g->incident_edges(v));
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == vs.size()) {
      PreferenceSystem::Orders o;
      for (std::size_t j = 0; j < vs.size(); ++j) o.emplace(vs[j], orders[j]);
      return f(PreferenceSystem(g, o));
    }
    std::sort(orders[k].begin(), orders[k].end());
    do rec(k + 1);
    while (std::next_permutation(orders[k].begin(), orders[k].end()));
  };
  rec(0);
}

TEST(PreferenceSystemTest, Validation) {
  const auto g = share(gen::star(3));
  EXPECT_THROW(PreferenceSystem(g, {}), ContractViolation);
  EXPECT_THROW(star_prefs(g, {0, 1}), ContractViolation);
  EXPECT_THROW(star_prefs(g, {0, 1, 1}), ContractViolation);
  const auto ps = star_prefs(g, {2, 0, 1});
  EXPECT_EQ(ps.rank(*g->find("a"), 2), 0u);
  EXPECT_TRUE(ps.prefers(*g->find("a"), 0, 1));
  EXPECT_EQ(ps.restricted(*g->find("a"), Coalition{0, 1}), (std::vector<EdgeId>{0, 1}));
  EXPECT_THROW(ps.rank(*g->find("a"), 5), ContractViolation);
  // Leaves may carry their trivial order without changing equality.
  const auto with_leaf = PreferenceSystem(g, {{*g->find("a"), {2, 0, 1}}, {*g->find("b"), {0}}});
  EXPECT_TRUE(ps == with_leaf);
  EXPECT_FALSE(ps == star_prefs(g, {0, 1, 2}));
}

TEST(GaleShapleyTest, Examples) {
  const auto single = share(gen::path(1));
  EXPECT_EQ(gale_shapley(PreferenceSystem(single, {}), Coalition{0}), Coalition{0});
  const auto k13 = share(gen::star(3));
  EXPECT_EQ(gale_shapley(star_prefs(k13, {0, 1, 2}), k13->players()), Coalition{0});
  EXPECT_EQ(gale_shapley(star_prefs(k13, {2, 0, 1}), Coalition{0, 1}), Coalition{0});
  const auto p4 = share(gen::path(3));
  const auto ps = canonical_preferences(classify_components(p4));
  EXPECT_EQ(gale_shapley(ps, p4->players()), (Coalition{0, 2}));
  EXPECT_EQ(gale_shapley(ps, Coalition{}), Coalition{});
  const auto k3 = share(gen::cycle(3));
  EXPECT_THROW(gale_shapley(PreferenceSystem(k3, {{0, {0, 2}}, {1, {0, 1}}, {2, {1, 2}}}),
                            k3->players()),
               UnsupportedInstance);
}

TEST(StableTest, Examples) {
  const auto p4 = share(gen::path(3));
  const auto ps = canonical_preferences(classify_components(p4));
  const auto all = p4->players();
  EXPECT_TRUE(is_stable(ps, all, Coalition{0, 2}).holds);
  const auto rider = is_stable(ps, all, Coalition{1});
  EXPECT_FALSE(rider.holds);
  EXPECT_EQ(*rider.witness, 0u);
  EXPECT_FALSE(is_stable(ps, all, Coalition{}).holds);
  EXPECT_FALSE(is_stable(ps, all, Coalition{0, 1}).holds);
  EXPECT_THROW(is_stable(ps, Coalition{0}, Coalition{2}), ContractViolation);
}

TEST(SchemeFromPreferencesTest, Examples) {
  const auto k12 = share(gen::star(2));
  const auto scheme = scheme_from_preferences(star_prefs(k12, {0, 1}));
  EXPECT_EQ(scheme.at(Coalition{0, 1}).values(), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(scheme.at(Coalition{0}).values(), std::vector<Rational>{1});
  EXPECT_EQ(scheme.at(Coalition{1}).values(), std::vector<Rational>{1});
  const auto p4 = share(gen::path(3));
  const auto p4_scheme = scheme_from_preferences(canonical_preferences(classify_components(p4)));
  EXPECT_EQ(p4_scheme.at(p4->players()).values(), (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(p4_scheme.at(Coalition{1}).values(), std::vector<Rational>{1});
  const PreferenceSystem rider_first(p4, {{*p4->find("b"), {1, 0}}, {*p4->find("c"), {2, 1}}});
  EXPECT_FALSE(free_riders_lowest(rider_first, classify_components(p4).cover));
  EXPECT_THROW(scheme_from_preferences(rider_first), ContractViolation);
  EXPECT_THROW(scheme_from_preferences(PreferenceSystem(share(gen::cycle(4)),
                                                        {{0, {0, 3}}, {1, {0, 1}}, {2, {1, 2}}, {3, {2, 3}}})),
               NotPopulationMonotonic);
}

TEST(PreferencesFromSchemeTest, Examples) {
  const auto k12 = share(gen::star(2));
  const VertexCoverGame game(k12);
  const auto back = preferences_from_scheme(game, scheme_from_preferences(star_prefs(k12, {1, 0})));
  EXPECT_EQ(back.orders().at(*k12->find("a")), (std::vector<EdgeId>{1, 0}));
  const auto half = AllocationScheme::from_rule(2, [](const Coalition& s) {
    return CostAllocation(s, std::vector<Rational>(s.size(), Rational(1, s.size())));
  });
  EXPECT_THROW(preferences_from_scheme(game, half), MalformedScheme);
  const auto both = AllocationScheme::from_rule(2, [](const Coalition& s) {
    return CostAllocation(s, std::vector<Rational>(s.size(), Rational(1)));
  });
  EXPECT_THROW(preferences_from_scheme(game, both), MalformedScheme);
}

TEST(EnumerateTest, CountsAndOrder) {
  EXPECT_EQ(enumerate_integral_pmas(gen::star(2)).size(), 2u);
  EXPECT_EQ(enumerate_integral_pmas(gen::path(3)).size(), 1u);
  EXPECT_EQ(enumerate_integral_pmas(gen::star(3)).size(), 6u);
  EXPECT_EQ(count_integral_pmas(gen::star(4)), 24);
  EXPECT_EQ(count_integral_pmas(gen::path(3)), 1);
  EXPECT_EQ(count_integral_pmas(gen::from_pairs({{0, 1}, {0, 2}, {3, 4}, {3, 5}})), 4);
  EXPECT_EQ(count_integral_pmas(gen::star(25)).str(), "15511210043330985984000000");
  EXPECT_THROW(count_integral_pmas(gen::cycle(3)), NotPopulationMonotonic);

  const auto k13 = share(gen::star(3));
  IntegralPmasEnumerator stream(k13);
  std::vector<std::vector<EdgeId>> orders;
  while (auto ps = stream.next_preferences()) orders.push_back(ps->orders().at(0));
  EXPECT_EQ(orders, (std::vector<std::vector<EdgeId>>{
                        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}));
  EXPECT_FALSE(stream.truncated());
}

TEST(EnumerateTest, LastVertexVariesFastest) {
  const auto g = share(gen::from_pairs({{0, 1}, {0, 2}, {3, 4}, {3, 5}}));
  IntegralPmasEnumerator stream(g);
  std::vector<std::string> seen;
  while (auto ps = stream.next_preferences()) seen.push_back(preferences_to_json(*ps).dump());
  EXPECT_EQ(seen, (std::vector<std::string>{
                      R"({"a":[0,1],"d":[2,3]})", R"({"a":[0,1],"d":[3,2]})",
                      R"({"a":[1,0],"d":[2,3]})", R"({"a":[1,0],"d":[3,2]})"}));
}

TEST(EnumerateTest, Truncation) {
  IntegralPmasEnumerator stream(share(gen::star(4)), 5);
  std::size_t n = 0;
  while (stream.next()) ++n;
  EXPECT_EQ(n, 5u);
  EXPECT_TRUE(stream.truncated());
  EXPECT_THROW(enumerate_integral_pmas(gen::star(4), 23), CapExceeded);
  EXPECT_EQ(enumerate_integral_pmas(gen::star(4), 24).size(), 24u);
}

TEST(PreferencesJsonTest, RoundTripAndErrors) {
  const auto g = share(gen::path(3));
  const auto ps = canonical_preferences(classify_components(g));
  const auto doc = preferences_to_json(ps);
  EXPECT_EQ(doc.dump(), R"({"b":[0,1],"c":[2,1]})");
  EXPECT_TRUE(preferences_from_json(nlohmann::json::parse(doc.dump()), g) == ps);
  using nlohmann::json;
  EXPECT_THROW(preferences_from_json(json::parse(R"({"zz":[0]})"), g), FormatError);
  EXPECT_THROW(preferences_from_json(json::parse(R"({"b":[0]})"), g), FormatError);
  EXPECT_THROW(preferences_from_json(json::parse(R"({"b":"0,1"})"), g), FormatError);
  EXPECT_THROW(preferences_from_json(json::parse(R"({"b":[0,-1]})"), g), FormatError);
}

// Property tests.

TEST(PreferenceProperty, StableMatchingIsUniqueMaximumAndStable) {
  for (int n = 2; n <= 5; ++n) {
    gen::for_each_graph(n, [&](const Graph& raw) {
      if (raw.edge_count() > 6 || !recognize_population_monotonic(raw).population_monotonic)
        return;
      const auto g = share(raw);
      const oracle::EdgeList el(*g);
      const auto cls = classify_components(g);
      for_each_preferences(g, [&](const PreferenceSystem& ps) {
        const bool lowest = free_riders_lowest(ps, cls.cover);
        for (oracle::Mask s = 1; s <= el.full(); ++s) {
          const auto c = Coalition::from_mask(s);
          const auto m = gale_shapley(ps, c);
          ASSERT_TRUE(is_stable(ps, c, m).holds);
          const auto all = oracle::stable_matchings(ps, el, s);
          ASSERT_EQ(all.size(), 1u);
          ASSERT_EQ(Coalition::from_mask(all[0]), m);
          if (lowest) {
            ASSERT_EQ(m.size(), static_cast<std::size_t>(oracle::nu(el, s)));
            ASSERT_EQ(m.size(), static_cast<std::size_t>(oracle::tau(el, s)));
          }
        }
      });
    });
  }
}

TEST(PreferenceProperty, BijectionRoundTrips) {
  for (int n = 2; n <= 6; ++n) {
    gen::for_each_graph(n, [&](const Graph& raw) {
      if (raw.edge_count() > 6 || !recognize_population_monotonic(raw).population_monotonic)
        return;
      const auto g = share(raw);
      const VertexCoverGame game(g);
      const auto cls = classify_components(g);
      for_each_preferences(g, [&](const PreferenceSystem& ps) {
        if (!free_riders_lowest(ps, cls.cover)) return;
        const auto scheme = scheme_from_preferences(ps);
        const auto back = preferences_from_scheme(game, scheme);
        ASSERT_TRUE(back == ps);
        ASSERT_TRUE(free_riders_lowest(back, cls.cover));
      });
      for (const auto& item : enumerate_integral_pmas(*g)) {
        const auto back = scheme_from_preferences(preferences_from_scheme(game, item.scheme));
        ASSERT_EQ(back.materialize().table(), item.scheme.materialize().table());
      }
    });
  }
}

TEST(PreferenceProperty, CountMatchesStreamLength) {
  gen::Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = gen::random_pm_forest(rng, 9);
    const auto count = count_integral_pmas(g);
    if (count > 5000) continue;
    EXPECT_EQ(count, enumerate_integral_pmas(g, 5000).size());
  }
}

}  // namespace
}  // namespace vcpmas
