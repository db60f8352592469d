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

#include "cayley/galois.hpp"
#include "cayley/instance.hpp"
#include "oracles.hpp"

namespace {

using cayley::Cyclotomic;
using cayley::Element;
using cayley::Rational;

std::string instance_path(const char* name) { return std::string(CAYLEY_INSTANCE_DIR) + "/" + name; }

cayley::ColourFunction colour_of(const char* name) { return cayley::load_instance(instance_path(name)).colour_function(); }

// H_f from the definition, by comparing f(g^h) with f(g) for every g and h.
std::vector<std::size_t> brute_H(const cayley::ColourFunction& f) {
  const auto& g = f.group();
  std::vector<std::size_t> out;
  for (std::size_t h = 1; h <= std::max<std::size_t>(g.order(), 1); ++h) {
    if (std::gcd(h, g.order()) != 1 || (h == g.order() && g.order() != 1)) continue;
    bool ok = true;
    for (Element x = 0; x < g.order() && ok; ++x) {
      Element y = 0;
      for (std::size_t k = 0; k < h; ++k) y = g.mul(y, x);
      ok = f(y) == f(x);
    }
    if (ok) out.push_back(h % std::max<std::size_t>(g.order(), 2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Galois, ExampleSubgroups) {
  const auto a = cayley::compute_H_f(colour_of("d8_alpha.inst"));
  EXPECT_EQ(a.members, (std::vector<std::size_t>{1, 7, 9, 15}));
  EXPECT_EQ(cayley::algebraic_degree(colour_of("d8_alpha.inst")), 2u);
  EXPECT_EQ(cayley::algebraic_degree(colour_of("d8_beta.inst")), 1u);
  EXPECT_EQ(cayley::compute_H_f(colour_of("d5_s1.inst")).members, (std::vector<std::size_t>{1, 9}));
  EXPECT_EQ(cayley::algebraic_degree(colour_of("d5_s2.inst")), 1u);
}

TEST(Galois, HfMatchesDefinition) {
  std::mt19937 rng(21);
  for (auto g : oracle::small_corpus_groups(24))
    for (int trial = 0; trial < 2; ++trial) {
      const auto f = oracle::random_class_function(g, rng);
      EXPECT_EQ(cayley::compute_H_f(f).members, brute_H(f)) << g->descriptor();
    }
}

TEST(Galois, AlphaField) {
  const auto r = cayley::splitting_field(colour_of("d8_alpha.inst"));
  EXPECT_EQ(r.degree, 2u);
  ASSERT_TRUE(r.primitive_element.has_value());
  EXPECT_EQ(r.primitive_element->to_string(), "2*z16^2 - 2*z16^6");
  EXPECT_EQ(cayley::poly_to_string(r.minimal_polynomial), "t^2 - 8");
  EXPECT_EQ(cayley::stabilizer(*r.primitive_element), r.fixing);
}

TEST(Galois, PrimitiveElementsForAllSubgroups) {
  for (std::size_t n : {5u, 8u, 12u, 15u, 16u, 21u, 24u}) {
    const auto units = cayley::units_mod(n).members;
    // every cyclic subgroup <u>, plus the full group and {1}
    std::vector<std::vector<long long>> gens{{}, {static_cast<long long>(n - 1)}};
    for (std::size_t u : units) gens.push_back({static_cast<long long>(u)});
    for (const auto& gen : gens) {
      const auto h = cayley::close_units(n, gen);
      const auto r = cayley::field_report(h);
      EXPECT_EQ(r.degree * h.size(), cayley::euler_phi(n));
      ASSERT_TRUE(r.primitive_element.has_value()) << n;
      EXPECT_EQ(cayley::stabilizer(*r.primitive_element), h);
      EXPECT_EQ(r.minimal_polynomial.size(), r.degree + 1);
    }
  }
}

TEST(Galois, HEqualsEigenvalueStabilizers) {
  std::mt19937 rng(77);
  for (auto g : oracle::small_corpus_groups(24)) {
    const auto t = cayley::character_table(g);
    for (int trial = 0; trial < 2; ++trial) {
      const auto f = oracle::random_class_function(g, rng);
      const auto s = cayley::spectrum_exact(f, t);
      EXPECT_TRUE(cayley::verify_H_equals_stabilizers(f, s)) << g->descriptor();
      // independent: intersect stabilizers computed numerically
      std::set<std::size_t> inter;
      for (std::size_t h : cayley::units_mod(t.conductor).members) inter.insert(h);
      for (const auto& e : s.entries) {
        const auto st = oracle::numeric_stabilizer(e.value);
        std::set<std::size_t> keep;
        for (auto h : st)
          if (inter.count(h)) keep.insert(h);
        inter = keep;
      }
      // reduce modulo |G| to compare with H_f
      std::set<std::size_t> reduced;
      for (auto h : inter) reduced.insert(h % std::max<std::size_t>(g->order(), 2));
      const auto hf = cayley::compute_H_f(f).members;
      if (g->order() > 1) EXPECT_EQ(std::vector<std::size_t>(reduced.begin(), reduced.end()), hf) << g->descriptor();
    }
  }
}

TEST(Galois, IntegralityVerdicts) {
  const auto a = colour_of("d8_alpha.inst");
  const auto b = colour_of("d8_beta.inst");
  const auto sa = cayley::spectrum_exact(a, cayley::character_table(a.group_ptr()));
  const auto sb = cayley::spectrum_exact(b, cayley::character_table(b.group_ptr()));
  const auto va = cayley::integrality_verdict(a, &sa);
  EXPECT_FALSE(va.rational);
  EXPECT_FALSE(va.integral);
  const auto vb = cayley::integrality_verdict(b, &sb);
  EXPECT_TRUE(vb.rational);
  EXPECT_TRUE(vb.integral);
  const auto vb2 = cayley::integrality_verdict(b);
  EXPECT_TRUE(vb2.integral);
  EXPECT_EQ(vb2.source, cayley::VerdictSource::AlgebraicInteger);

  auto z2 = cayley::make_cyclic(2);
  const auto half = cayley::ColourFunction(z2, {Rational(0), Rational(1, 2)});
  const auto vh = cayley::integrality_verdict(half);
  EXPECT_TRUE(vh.rational);
  EXPECT_FALSE(vh.integral);
  EXPECT_EQ(vh.source, cayley::VerdictSource::Numeric);
}

TEST(Galois, IntegralOverSubfield) {
  const auto a = colour_of("d8_alpha.inst");
  EXPECT_TRUE(cayley::is_algebraically_integral_over(a, cayley::close_units(16, {7, 9})));
  EXPECT_TRUE(cayley::is_algebraically_integral_over(a, cayley::close_units(16, {})));
  EXPECT_FALSE(cayley::is_algebraically_integral_over(a, cayley::close_units(16, {3})));
}

TEST(Galois, MultisetHStar) {
  const auto doc = cayley::load_instance(instance_path("d5_s1.inst"));
  const auto s = doc.connection_multiset();
  EXPECT_EQ(cayley::multiset_H_star(s).members, (std::vector<std::size_t>{1, 9}));
  EXPECT_TRUE(cayley::multiset_H_star(s).is_subgroup_of(cayley::multiset_H_star(s.shadow())));
  // S_2 takes every rotation with the same multiplicity
  const auto d = cayley::load_instance(instance_path("d5_s2.inst")).connection_multiset();
  EXPECT_EQ(cayley::multiset_H_star(d).size(), 4u);
}

TEST(Galois, DistanceReports) {
  auto g = cayley::make_cyclic(5);
  const auto s = cayley::ConnectionMultiset::from_elements(g, std::vector<Element>{1, 4});
  const auto r = cayley::distance_report(s);
  EXPECT_EQ(r.h_prime.members, (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(r.field.degree, 2u);
  ASSERT_TRUE(r.spectrum.has_value());
  EXPECT_EQ(r.spectrum->total_multiplicity(), 5u);
  EXPECT_EQ(r.layered_form.size(), 5u);

  auto d = cayley::make_dihedral(6);
  std::vector<Element> refl;
  for (Element x = 6; x < 12; ++x) refl.push_back(x);
  const auto rd = cayley::distance_report(cayley::ConnectionMultiset::from_elements(d, refl).shadow());
  EXPECT_EQ(rd.distance.diameter, 2u);
  EXPECT_EQ(rd.field.degree, 1u);
}

TEST(Galois, TransferCheck) {
  const auto a = colour_of("d8_alpha.inst");
  auto g = a.group_ptr();
  // beta differs from alpha only on the rational part of the class sums
  std::vector<Rational> v(a.values().begin(), a.values().end());
  v[g->at("b")] = v[g->at("b*a^2")] = v[g->at("b*a^4")] = v[g->at("b*a^6")] = 11;
  const cayley::ColourFunction beta(g, v);
  const auto k = cayley::close_units(16, {7});
  EXPECT_TRUE(cayley::transfer_check(a, beta, k));
  EXPECT_FALSE(cayley::transfer_check(a, beta, cayley::close_units(16, {3})));

  std::vector<Rational> w(a.values().begin(), a.values().end());
  w[g->at("a^3")] = w[g->at("a^5")] = 1;
  const cayley::ColourFunction gamma(g, w);
  try {
    cayley::transfer_check(a, gamma, cayley::close_units(16, {3}));
    FAIL() << "expected HypothesisFails";
  } catch (const cayley::Error& e) {
    EXPECT_EQ(e.kind(), cayley::ErrorKind::HypothesisFails);
  }
}

TEST(Galois, GaussPeriodsAreFixed) {
  const auto h = cayley::close_units(21, {4});
  for (long long k = 1; k < 21; ++k) {
    const auto p = cayley::gauss_period(h, k);
    for (auto u : h.members) EXPECT_EQ(cayley::galois_apply(u, p), p);
  }
}

}  // namespace
