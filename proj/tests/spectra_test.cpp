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

#include "cayley/instance.hpp"
#include "cayley/spectra.hpp"
#include "oracles.hpp"

namespace {

using cayley::Cyclotomic;
using cayley::Element;
using cayley::Rational;

std::string instance_path(const char* name) { return std::string(CAYLEY_INSTANCE_DIR) + "/" + name; }

std::vector<std::pair<std::string, std::size_t>> rendered(const cayley::Spectrum& s) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& e : s.entries) out.emplace_back(e.value.to_string(), e.multiplicity);
  return out;
}

cayley::Spectrum exact_of(const cayley::ColourFunction& f) {
  return cayley::spectrum_exact(f, cayley::character_table(f.group_ptr()));
}

// Inner product <x, y> = (1/|G|) sum_g x(g) conj(y(g)), exactly.
Cyclotomic inner(const cayley::CharacterTable& t, std::size_t i, std::size_t j) {
  const auto& cc = t.group->classes();
  Cyclotomic acc(t.conductor);
  for (std::size_t c = 0; c < cc.size(); ++c)
    acc += t.rows[i].values[c] * cayley::galois_apply(t.conductor - 1, t.rows[j].values[c]) *
           Rational(cc.classes[c].size());
  return acc / Rational(t.group->order());
}

std::vector<cayley::GroupPtr> table_groups() {
  auto out = oracle::small_corpus_groups(40);
  using cayley::make_cyclic;
  using cayley::make_product;
  out.push_back(make_product(make_cyclic(2), make_cyclic(2)));
  out.push_back(make_product(make_cyclic(4), make_cyclic(6)));
  out.push_back(make_product(make_product(make_cyclic(2), make_cyclic(2)), make_cyclic(2)));
  out.push_back(make_product(cayley::make_dihedral(4), make_cyclic(2)));
  out.push_back(make_product(cayley::make_dihedral(3), make_cyclic(3)));
  out.push_back(make_product(cayley::make_dihedral(5), make_cyclic(4)));
  return out;
}

TEST(Spectra, TableInvariants) {
  for (const auto& g : table_groups()) {
    const auto t = cayley::character_table(g);
    ASSERT_EQ(t.size(), g->classes().size()) << g->descriptor();
    std::size_t sum = 0;
    for (const auto& r : t.rows) sum += r.degree * r.degree;
    EXPECT_EQ(sum, g->order()) << g->descriptor();
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(t.rows[i].values[0], Cyclotomic::rational(t.conductor, Rational(t.rows[i].degree)));
      for (std::size_t j = 0; j < t.size(); ++j)
        ASSERT_EQ(inner(t, i, j), Cyclotomic::rational(t.conductor, i == j ? 1 : 0))
            << g->descriptor() << " rows " << t.rows[i].label << "," << t.rows[j].label;
    }
    // Column orthogonality: sum_i chi_i(a) conj chi_i(b) = |C_G(a)| [a ~ b].
    const auto& cc = g->classes();
    for (std::size_t a = 0; a < cc.size(); ++a)
      for (std::size_t b = 0; b < cc.size(); ++b) {
        Cyclotomic acc(t.conductor);
        for (std::size_t i = 0; i < t.size(); ++i)
          acc += t.rows[i].values[a] * cayley::galois_apply(t.conductor - 1, t.rows[i].values[b]);
        const Rational want = a == b ? Rational(g->order() / cc.classes[a].size()) : Rational(0);
        ASSERT_EQ(acc, Cyclotomic::rational(t.conductor, want)) << g->descriptor();
      }
  }
}

TEST(Spectra, UnsupportedFamily) {
  auto s4 = cayley::make_from_generators({{1, 0, 2, 3}, {1, 2, 3, 0}});
  EXPECT_FALSE(cayley::has_character_table(*s4));
  EXPECT_THROW(cayley::character_table(s4), cayley::Error);
}

TEST(Spectra, AlphaExample) {
  const auto doc = cayley::load_instance(instance_path("d8_alpha.inst"));
  const auto s = exact_of(doc.colour_function());
  const std::vector<std::pair<std::string, std::size_t>> want{{"241/5", 1},
                                                              {"49/5", 1},
                                                              {"2/5*z16^2 - 2/5*z16^6", 4},
                                                              {"-2/5*z16^2 + 2/5*z16^6", 4},
                                                              {"-1", 4},
                                                              {"-71/5", 1},
                                                              {"-199/5", 1}};
  EXPECT_EQ(rendered(s), want);
  EXPECT_NEAR(s.entries[2].value.to_complex().real(), 0.4 * std::sqrt(2.0), 1e-12);
}

TEST(Spectra, BetaExample) {
  const auto doc = cayley::load_instance(instance_path("d8_beta.inst"));
  const auto s = exact_of(doc.colour_function());
  const std::vector<std::pair<std::string, std::size_t>> want{{"58", 1}, {"18", 1}, {"0", 8},
                                                              {"-6", 4}, {"-14", 1}, {"-38", 1}};
  EXPECT_EQ(rendered(s), want);
}

TEST(Spectra, DihedralFiveExamples) {
  const auto d1 = cayley::load_instance(instance_path("d5_s1.inst"));
  const auto s1 = exact_of(d1.colour_function());
  ASSERT_EQ(s1.entries.size(), 4u);
  const double r5 = std::sqrt(5.0);
  const std::vector<std::pair<double, std::size_t>> want{{9, 1}, {-1 + r5, 4}, {-1, 1}, {-1 - r5, 4}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(s1.entries[i].value.to_complex().real(), want[i].first, 1e-12);
    EXPECT_EQ(s1.entries[i].multiplicity, want[i].second);
  }
  // -1 + sqrt 5 squared is 6 - 2 sqrt 5
  const auto x = s1.entries[1].value;
  EXPECT_EQ(x * x, Cyclotomic::rational(10, 4) - x * Rational(2));

  const auto d2 = cayley::load_instance(instance_path("d5_s2.inst"));
  const std::vector<std::pair<std::string, std::size_t>> want2{{"8", 2}, {"-2", 8}};
  EXPECT_EQ(rendered(exact_of(d2.colour_function())), want2);
}

TEST(Spectra, TraceAndFrobeniusIdentities) {
  std::mt19937 rng(99);
  for (const auto& g : table_groups()) {
    if (g->order() > 24) continue;
    const auto t = cayley::character_table(g);
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = oracle::random_class_function(g, rng);
      const auto s = cayley::spectrum_exact(f, t);
      Cyclotomic tr(t.conductor), sq(t.conductor);
      for (const auto& e : s.entries) {
        tr += e.value * Rational(e.multiplicity);
        sq += e.value * e.value * Rational(e.multiplicity);
      }
      Rational fro = 0;
      for (Element x = 0; x < g->order(); ++x) fro += f(x) * f(x);
      EXPECT_EQ(tr, Cyclotomic::rational(t.conductor, Rational(g->order()) * f(0)));
      EXPECT_EQ(sq, Cyclotomic::rational(t.conductor, Rational(g->order()) * fro));
      EXPECT_EQ(s.total_multiplicity(), g->order());
    }
  }
}

TEST(Spectra, CirculantMatchesDft) {
  std::mt19937 rng(4);
  for (std::size_t n = 1; n <= 24; ++n) {
    auto g = cayley::make_cyclic(n);
    const auto f = oracle::random_class_function(g, rng);
    std::vector<double> c(n);
    for (Element x = 0; x < n; ++x) c[x] = f(x).convert_to<double>();
    const auto want = oracle::circulant_eigenvalues(c);
    const auto exact = exact_of(f).embeddings();
    const auto numeric = cayley::spectrum_numeric(f).values;
    ASSERT_EQ(exact.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(exact[i], want[i], 1e-9);
      EXPECT_NEAR(numeric[i], want[i], 1e-9);
    }
  }
}

TEST(Spectra, CycleEigenvalues) {
  auto g = cayley::make_cyclic(5);
  std::vector<Rational> v(5, Rational(0));
  v[1] = v[4] = 1;
  const auto numeric = cayley::spectrum_numeric(cayley::ColourFunction(g, v)).values;
  std::vector<double> want;
  for (int k = 0; k < 5; ++k) want.push_back(2 * std::cos(2 * std::numbers::pi * k / 5));
  std::sort(want.begin(), want.end(), std::greater<>());
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(numeric[i], want[i], 1e-12);
}

TEST(Spectra, AdjacencyMatrixIsSymmetric) {
  const auto doc = cayley::load_instance(instance_path("d8_alpha.inst"));
  const auto a = cayley::adjacency_matrix(doc.colour_function());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(a[i][j], a[j][i]);
}

TEST(Spectra, CompareDetectsMismatch) {
  const auto doc = cayley::load_instance(instance_path("d8_alpha.inst"));
  const auto f = doc.colour_function();
  const auto exact = exact_of(f);
  auto numeric = cayley::spectrum_numeric(f);
  EXPECT_TRUE(cayley::compare_spectra(exact, numeric, 1e-8).match);
  numeric.values[3] += 1e-3;
  const auto cmp = cayley::compare_spectra(exact, numeric, 1e-8);
  EXPECT_FALSE(cmp.match);
  EXPECT_GT(cmp.max_deviation, cmp.threshold);
  numeric.values.pop_back();
  EXPECT_FALSE(cayley::compare_spectra(exact, numeric, 1e-8).match);
}

TEST(Spectra, JacobiNoConvergence) {
  cayley::RealMatrix a{{1, 2, 3}, {2, 5, 6}, {3, 6, 9}};
  try {
    cayley::jacobi_eigenvalues(a, {1e-300, 0});
    FAIL() << "expected NoConvergence";
  } catch (const cayley::Error& e) {
    EXPECT_EQ(e.kind(), cayley::ErrorKind::NoConvergence);
  }
}

}  // namespace
