// Copyright 2026 The cayley-degree Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>

#include "cayley/colour.hpp"
#include "oracles.hpp"

namespace {

using cayley::Element;
using cayley::Rational;

cayley::ColourFunction alpha() {
  auto g = cayley::make_dihedral(8);
  std::vector<Rational> v(16, Rational(0));
  auto set = [&](const char* x, Rational q) { v[g->at(x)] = q; };
  set("a", 1);
  set("a^7", 1);
  set("a^2", Rational(1, 2));
  set("a^6", Rational(1, 2));
  set("a^3", Rational(3, 5));
  set("a^5", Rational(3, 5));
  for (std::size_t k = 0; k < 8; ++k) v[8 + k] = k % 2 ? Rational(7) : Rational(4);
  return cayley::ColourFunction(g, v);
}

template <class F>
cayley::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const cayley::Error& e) {
    return e.kind();
  }
  return cayley::ErrorKind::InvalidArgument;
}

TEST(Colour, AlphaAccepted) {
  const auto f = alpha();
  EXPECT_EQ(f(f.group().at("b*a^3")), Rational(7));
  EXPECT_FALSE(f.is_integer_valued());
}

TEST(Colour, RejectsNonClassFunction) {
  auto g = cayley::make_dihedral(4);
  std::vector<Rational> v(8, Rational(0));
  v[g->at("a")] = v[g->at("a^3")] = 1;
  v[g->at("b")] = 1;
  EXPECT_EQ(kind_of([&] { cayley::ColourFunction(g, v); }), cayley::ErrorKind::NotClassFunction);
}

TEST(Colour, RejectsAsymmetric) {
  auto g = cayley::make_cyclic(5);
  std::vector<Rational> v(5, Rational(0));
  v[1] = 1;
  EXPECT_EQ(kind_of([&] { cayley::ColourFunction(g, v); }), cayley::ErrorKind::NotSymmetric);
}

TEST(Colour, MultisetExamples) {
  auto g = cayley::make_dihedral(5);
  std::vector<Element> s1{g->at("a^2"), g->at("a^2"), g->at("a^3"), g->at("a^3")};
  for (std::size_t k = 0; k < 5; ++k) s1.push_back(static_cast<Element>(5 + k));
  const auto m1 = cayley::ConnectionMultiset::from_elements(g, s1);
  EXPECT_TRUE(m1.is_normal());
  EXPECT_EQ(m1.size(), 9u);
  EXPECT_EQ(m1.shadow().size(), 7u);
  const auto f = cayley::colour_from_multiset(m1);
  EXPECT_EQ(f(g->at("a^2")), Rational(2));
  EXPECT_EQ(f(g->at("a")), Rational(0));

  std::vector<Element> s2{g->at("a"), g->at("a^4"), g->at("a^2"), g->at("a^3")};
  for (std::size_t k = 0; k < 5; ++k) s2.push_back(static_cast<Element>(5 + k));
  EXPECT_TRUE(cayley::ConnectionMultiset::from_elements(g, s2).is_normal());
}

TEST(Colour, ConnectionValidation) {
  auto g = cayley::make_cyclic(6);
  std::vector<std::size_t> m(6, 0);
  m[0] = 1;
  EXPECT_EQ(kind_of([&] { cayley::ConnectionMultiset(g, m); }), cayley::ErrorKind::InvalidConnection);
  m[0] = 0;
  m[1] = 1;
  EXPECT_EQ(kind_of([&] { cayley::ConnectionMultiset(g, m); }), cayley::ErrorKind::InvalidConnection);
  auto d = cayley::make_dihedral(4);
  std::vector<Element> one{d->at("b")};
  const auto s = cayley::ConnectionMultiset::from_elements(d, one);
  EXPECT_EQ(kind_of([&] { cayley::colour_from_multiset(s); }), cayley::ErrorKind::NotNormal);
}

TEST(Colour, CycleLayers) {
  auto g = cayley::make_cyclic(5);
  std::vector<Element> s{1, 4};
  const auto dc = cayley::distance_colour(g, s);
  EXPECT_EQ(dc.diameter, 2u);
  ASSERT_EQ(dc.layers.size(), 3u);
  EXPECT_EQ(dc.layers[1], (std::vector<Element>{1, 4}));
  EXPECT_EQ(dc.layers[2], (std::vector<Element>{2, 3}));
  EXPECT_EQ(dc.distance(3), Rational(2));
}

TEST(Colour, Disconnected) {
  auto g = cayley::make_cyclic(6);
  std::vector<Element> s{2, 4};
  EXPECT_FALSE(cayley::is_connected(*g, s));
  EXPECT_EQ(kind_of([&] { cayley::distance_colour(g, s); }), cayley::ErrorKind::Disconnected);
}

// Layers from BFS agree with word lengths from a brute-force product closure.
TEST(Colour, DistanceMatchesWordLength) {
  std::mt19937 rng(8);
  for (auto g : oracle::small_corpus_groups(16)) {
    if (g->order() < 2) continue;
    std::vector<Element> s;
    for (Element x = 1; x < g->order(); ++x)
      if (rng() % 3 == 0) s.push_back(x), s.push_back(g->inverse(x));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const auto d = cayley::bfs_distances(*g, s);
    std::vector<std::size_t> ref(g->order(), SIZE_MAX);
    std::set<Element> reached{0};
    ref[0] = 0;
    for (std::size_t len = 1; len <= g->order(); ++len) {
      std::set<Element> next = reached;
      for (Element x : reached)
        for (Element y : s) next.insert(g->mul(x, y));
      for (Element x : next)
        if (ref[x] == SIZE_MAX) ref[x] = len;
      reached = next;
    }
    EXPECT_EQ(d, ref) << g->descriptor();
  }
}

TEST(Colour, PullbackAndDelta) {
  const auto f = alpha();
  EXPECT_TRUE(cayley::fixed_by_power_map(f, 7));
  EXPECT_TRUE(cayley::fixed_by_power_map(f, 9));
  EXPECT_FALSE(cayley::fixed_by_power_map(f, 3));
  EXPECT_EQ(cayley::pullback(f, 15), f);

  auto g = cayley::make_dihedral(4);
  std::vector<Rational> v(8, Rational(0));
  v[g->at("b")] = v[g->at("b*a^2")] = 2;
  const auto delta = cayley::delta_vector(cayley::ColourFunction(g, v));
  // classes of D_4 by least element: 1, a, a^2, b, b*a
  EXPECT_EQ(delta, (std::vector<Rational>{0, 0, 0, 4, 0}));
}

TEST(Colour, MultiplicityRoundTrip) {
  std::mt19937 rng(17);
  for (auto g : oracle::small_corpus_groups(12)) {
    std::vector<Element> elements;
    for (Element x = 1; x < g->order(); ++x) {
      const std::size_t k = rng() % 3;
      for (std::size_t i = 0; i < k; ++i) {
        elements.push_back(x);
        elements.push_back(g->inverse(x));
      }
    }
    const auto s = cayley::ConnectionMultiset::from_elements(g, elements);
    EXPECT_EQ(s.size(), elements.size());
    std::vector<Element> back;
    for (Element x = 0; x < g->order(); ++x) back.insert(back.end(), s(x), x);
    std::sort(elements.begin(), elements.end());
    EXPECT_EQ(back, elements);
  }
}

}  // namespace
