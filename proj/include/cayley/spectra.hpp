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

#ifndef CAYLEY_SPECTRA_HPP
#define CAYLEY_SPECTRA_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "colour.hpp"
#include "exactnum.hpp"
#include "groups.hpp"

namespace cayley {

struct Irreducible {
  std::string label;
  std::size_t degree = 1;
  std::vector<Cyclotomic> values;  // one per conjugacy class
};

/// Irreducible characters of a group, valued in Q(zeta_|G|).
struct CharacterTable {
  GroupPtr group;
  std::size_t conductor = 1;
  std::vector<Irreducible> rows;

  const Cyclotomic& value(std::size_t row, Element g) const { return rows[row].values[group->classes().class_of[g]]; }
  std::size_t size() const { return rows.size(); }
};

inline CharacterTable char_table_cyclic(const GroupPtr& g) {
  if (g->family() != Family::Cyclic) throw Error(ErrorKind::UnsupportedFamily, g->descriptor() + " is not cyclic");
  const std::size_t n = g->order();
  CharacterTable t{g, n, {}};
  const auto& cc = g->classes();
  for (std::size_t j = 0; j < n; ++j) {
    Irreducible row{"chi_" + std::to_string(j), 1, {}};
    for (Element rep : cc.representative) row.values.push_back(Cyclotomic::zeta_power(n, static_cast<long long>(j * rep)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// Characters of D_m: psi_1, psi_2 (and psi_3, psi_4 for even m) of degree
/// one, then chi_h of degree two with chi_h(a^k) = zeta^{2kh} + zeta^{-2kh}
/// over zeta = zeta_{2m} and chi_h(b*a^k) = 0.
inline CharacterTable char_table_dihedral(const GroupPtr& g) {
  if (g->family() != Family::Dihedral) throw Error(ErrorKind::UnsupportedFamily, g->descriptor() + " is not dihedral");
  const std::size_t m = g->parameter(), n = 2 * m;
  CharacterTable t{g, n, {}};
  const auto& cc = g->classes();
  auto linear = [&](std::string label, auto fn) {
    Irreducible row{std::move(label), 1, {}};
    for (Element rep : cc.representative) {
      const bool reflection = rep >= m;
      const std::size_t k = reflection ? rep - m : rep;
      row.values.push_back(Cyclotomic::rational(n, fn(reflection, k)));
    }
    t.rows.push_back(std::move(row));
  };
  auto sign = [](std::size_t k) { return k % 2 == 0 ? 1 : -1; };
  linear("psi_1", [](bool, std::size_t) { return 1; });
  linear("psi_2", [](bool r, std::size_t) { return r ? -1 : 1; });
  if (m % 2 == 0) {
    linear("psi_3", [&](bool, std::size_t k) { return sign(k); });
    linear("psi_4", [&](bool r, std::size_t k) { return r ? sign(k + 1) : sign(k); });
  }
  const std::size_t hmax = m % 2 == 1 ? (m - 1) / 2 : m / 2 - 1;
  for (std::size_t h = 1; h <= hmax; ++h) {
    Irreducible row{"chi_" + std::to_string(h), 2, {}};
    for (Element rep : cc.representative) {
      if (rep >= m) {
        row.values.emplace_back(n);
        continue;
      }
      const auto e = static_cast<long long>(2 * rep * h);
      row.values.push_back(Cyclotomic::zeta_power(n, e) + Cyclotomic::zeta_power(n, -e));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline CharacterTable character_table(const GroupPtr& g);

/// Tensor products of the factor tables, all values moved into
/// Q(zeta_{|G x H|}).
inline CharacterTable char_table_product(const GroupPtr& g) {
  if (g->family() != Family::Product) throw Error(ErrorKind::UnsupportedFamily, g->descriptor() + " is not a product");
  const auto& left = g->factors()[0];
  const auto& right = g->factors()[1];
  const CharacterTable tl = character_table(left), tr = character_table(right);
  const std::size_t n = g->order(), nh = right->order();
  CharacterTable t{g, n, {}};
  for (std::size_t i = 0; i < tl.size(); ++i)
    for (std::size_t j = 0; j < tr.size(); ++j) {
      Irreducible row{tl.rows[i].label + "x" + tr.rows[j].label, tl.rows[i].degree * tr.rows[j].degree, {}};
      for (Element rep : g->classes().representative)
        row.values.push_back(tl.value(i, rep / nh).embed(n) * tr.value(j, rep % nh).embed(n));
      t.rows.push_back(std::move(row));
    }
  return t;
}

namespace detail {

inline bool is_cyclic_product(const Group& g) {
  if (g.family() == Family::Cyclic) return true;
  if (g.family() != Family::Product) return false;
  return is_cyclic_product(*g.factors()[0]) && is_cyclic_product(*g.factors()[1]);
}

inline bool has_table(const Group& g) {
  switch (g.family()) {
    case Family::Cyclic:
    case Family::Dihedral: return true;
    case Family::Product: return has_table(*g.factors()[0]) && has_table(*g.factors()[1]);
    case Family::Generated: return false;
  }
  return false;
}

}  // namespace detail

/// Products of cyclic groups only.
inline CharacterTable char_table_abelian(const GroupPtr& g) {
  if (!detail::is_cyclic_product(*g))
    throw Error(ErrorKind::UnsupportedFamily, g->descriptor() + " is not a product of cyclic groups");
  return g->family() == Family::Cyclic ? char_table_cyclic(g) : char_table_product(g);
}

inline bool has_character_table(const Group& g) { return detail::has_table(g); }

inline CharacterTable character_table(const GroupPtr& g) {
  switch (g->family()) {
    case Family::Cyclic: return char_table_cyclic(g);
    case Family::Dihedral: return char_table_dihedral(g);
    case Family::Product: return char_table_product(g);
    case Family::Generated: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, "no character table for " + g->descriptor());
}

struct SpectrumEntry {
  Cyclotomic value;
  std::size_t multiplicity = 0;
};

/// Distinct exact eigenvalues with multiplicities, sorted by descending real
/// embedding (ties by canonical coefficient order). `per_irreducible` keeps
/// lambda_i with multiplicity d_i^2 in table row order, before merging.
struct Spectrum {
  std::size_t conductor = 1;
  std::vector<SpectrumEntry> entries;
  std::vector<SpectrumEntry> per_irreducible;

  std::size_t total_multiplicity() const {
    std::size_t s = 0;
    for (const auto& e : entries) s += e.multiplicity;
    return s;
  }

  /// Multiplicity-expanded real embeddings, descending.
  std::vector<double> embeddings() const {
    std::vector<double> out;
    for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value.to_complex().real());
    return out;
  }
};

inline std::vector<SpectrumEntry> merge_spectrum(const std::vector<SpectrumEntry>& raw) {
  std::vector<SpectrumEntry> merged;
  for (const auto& e : raw) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const SpectrumEntry& m) { return m.value == e.value; });
    if (it == merged.end())
      merged.push_back(e);
    else
      it->multiplicity += e.multiplicity;
  }
  std::stable_sort(merged.begin(), merged.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    const double x = a.value.to_complex().real(), y = b.value.to_complex().real();
    if (std::abs(x - y) > 1e-9 * (1.0 + std::abs(x) + std::abs(y))) return x > y;
    return canonical_less(a.value, b.value);
  });
  return merged;
}

/// lambda_i = (1/d_i) sum_g f(g) chi_i(g), multiplicity d_i^2. The sum runs
/// over conjugacy classes since both factors are class functions.
inline Cyclotomic character_sum(const ColourFunction& f, const CharacterTable& t, std::size_t row) {
  const auto& cc = f.group().classes();
  Cyclotomic acc(t.conductor);
  for (std::size_t c = 0; c < cc.size(); ++c) {
    const Rational& fv = f(cc.representative[c]);
    if (fv == 0) continue;
    acc += t.rows[row].values[c] * (fv * Rational(cc.classes[c].size()));
  }
  return acc / Rational(t.rows[row].degree);
}

inline Spectrum spectrum_exact(const ColourFunction& f, const CharacterTable& t) {
  if (f.group_ptr() != t.group && f.group().descriptor() != t.group->descriptor())
    throw Error(ErrorKind::InvalidArgument, "colour and character table live on different groups");
  Spectrum s;
  s.conductor = t.conductor;
  for (std::size_t i = 0; i < t.size(); ++i)
    s.per_irreducible.push_back({character_sum(f, t, i), t.rows[i].degree * t.rows[i].degree});
  s.entries = merge_spectrum(s.per_irreducible);
  return s;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// [f(g h^{-1})]_{g,h}.
inline RationalMatrix adjacency_matrix(const ColourFunction& f) {
  const Group& g = f.group();
  const std::size_t n = g.order();
  RationalMatrix a(n, std::vector<Rational>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) a[x][y] = f(g.mul(x, g.inverse(y)));
  return a;
}

using RealMatrix = std::vector<std::vector<double>>;

struct JacobiOptions {
  double relative_tolerance = 1e-12;
  std::size_t max_sweeps = 100;
};

inline double frobenius_norm(const RealMatrix& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

/// Cyclic Jacobi rotations on a symmetric matrix; sweeps until the
/// off-diagonal Frobenius mass falls below relative_tolerance * ||A||_F.
/// Returns the eigenvalues in descending order.
inline std::vector<double> jacobi_eigenvalues(RealMatrix a, const JacobiOptions& opt = {}) {
  const std::size_t n = a.size();
  const double target = opt.relative_tolerance * frobenius_norm(a);
  auto off_mass = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a[i][j] * a[i][j];
    return std::sqrt(s);
  };
  std::size_t sweep = 0;
  while (off_mass() > target) {
    if (sweep++ == opt.max_sweeps)
      throw Error(ErrorKind::NoConvergence, "Jacobi did not converge in " + std::to_string(opt.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = a[p][k] = c * akp - s * akq;
          a[k][q] = a[q][k] = s * akp + c * akq;
        }
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

struct NumericSpectrum {
  std::vector<double> values;  // descending
  double frobenius_norm = 0.0;
};

inline NumericSpectrum spectrum_numeric(const ColourFunction& f, const JacobiOptions& opt = {}) {
  const auto exact = adjacency_matrix(f);
  RealMatrix a(exact.size(), std::vector<double>(exact.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = exact[i][j].convert_to<double>();
  NumericSpectrum out;
  out.frobenius_norm = frobenius_norm(a);
  out.values = jacobi_eigenvalues(std::move(a), opt);
  return out;
}

struct SpectrumComparison {
  bool match = false;
  double max_deviation = 0.0;
  double threshold = 0.0;
  std::optional<std::pair<double, double>> worst;  // (exact, numeric)
  std::string message;
};

/// Pairs the multiplicity-expanded exact embeddings with the numeric values
/// in sorted order; matches iff every deviation is within tol * (1 + ||A||_F).
inline SpectrumComparison compare_spectra(const Spectrum& exact, const NumericSpectrum& numeric, double tol) {
  SpectrumComparison r;
  r.threshold = tol * (1.0 + numeric.frobenius_norm);
  auto e = exact.embeddings();
  auto v = numeric.values;
  std::sort(e.begin(), e.end(), std::greater<>());
  std::sort(v.begin(), v.end(), std::greater<>());
  if (e.size() != v.size()) {
    r.message = "size mismatch: " + std::to_string(e.size()) + " exact vs " + std::to_string(v.size()) + " numeric";
    return r;
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double d = std::abs(e[i] - v[i]);
    if (!r.worst || d > r.max_deviation) {
      r.max_deviation = d;
      r.worst = std::make_pair(e[i], v[i]);
    }
  }
  for (const auto& entry : exact.entries)
    if (std::abs(entry.value.to_complex().imag()) > 1e-9) {
      r.message = "non-real eigenvalue " + entry.value.to_string();
      return r;
    }
  r.match = r.max_deviation <= r.threshold;
  char buf[160];
  if (r.worst)
    std::snprintf(buf, sizeof buf, "max deviation %.3e (exact %.12g vs numeric %.12g), threshold %.3e", r.max_deviation,
                  r.worst->first, r.worst->second, r.threshold);
  else
    std::snprintf(buf, sizeof buf, "empty spectra");
  r.message = buf;
  return r;
}

}  // namespace cayley

#endif  // CAYLEY_SPECTRA_HPP
