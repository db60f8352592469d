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

#ifndef CAYLEY_GALOIS_HPP
#define CAYLEY_GALOIS_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "colour.hpp"
#include "exactnum.hpp"
#include "spectra.hpp"

namespace cayley {

/// H_f = { h in Z_n^* : f(g^h) = f(g) for all g }, n = |G|, by exhaustive
/// scan of the units.
inline UnitSubgroup compute_H_f(const ColourFunction& f) {
  const std::size_t n = f.order();
  std::vector<std::size_t> members;
  for (std::size_t h : units_mod(n).members)
    if (fixed_by_power_map(f, static_cast<long long>(h))) members.push_back(h);
  return subgroup_from_members(n, std::move(members));
}

/// Splitting field of a Cayley colour graph as the fixed field of a unit
/// subgroup H inside Q(zeta_n), of degree phi(n)/|H| over Q.
struct FieldReport {
  std::size_t modulus = 1;
  UnitSubgroup fixing;
  std::size_t degree = 1;
  std::optional<Cyclotomic> primitive_element;
  RatPoly minimal_polynomial;  // of primitive_element, when present
};

inline std::size_t algebraic_degree(const ColourFunction& f) {
  return euler_phi(f.order()) / compute_H_f(f).size();
}

/// sum_{h in H} zeta_n^{k h}.
inline Cyclotomic gauss_period(const UnitSubgroup& h, long long k) {
  std::map<long long, Rational> terms;
  for (std::size_t u : h.members) terms[k * static_cast<long long>(u)] += 1;
  return Cyclotomic::from_exponents(h.modulus, terms);
}

namespace detail {

inline bool generates_fixed_field(const Cyclotomic& x, const UnitSubgroup& h) { return stabilizer(x) == h; }

// Best-effort search for a generator of Q(zeta_n)^H: single Gauss periods
// first, then P_{k1} + c P_{k2} for c = 1..8.
inline std::optional<Cyclotomic> find_primitive_element(const UnitSubgroup& h) {
  const std::size_t n = h.modulus;
  if (h.size() == euler_phi(n)) return Cyclotomic::rational(n, 1);
  std::vector<Cyclotomic> periods;
  for (std::size_t k = 1; k < n; ++k) {
    periods.push_back(gauss_period(h, static_cast<long long>(k)));
    if (generates_fixed_field(periods.back(), h)) return periods.back();
  }
  for (std::size_t a = 0; a < periods.size(); ++a)
    for (std::size_t b = a + 1; b < periods.size(); ++b) {
      if (periods[a].is_rational() || periods[b].is_rational()) continue;
      for (int c = 1; c <= 8; ++c) {
        Cyclotomic x = periods[a] + periods[b] * Rational(c);
        if (generates_fixed_field(x, h)) return x;
      }
    }
  return std::nullopt;
}

}  // namespace detail

inline FieldReport field_report(const UnitSubgroup& h) {
  FieldReport r;
  r.modulus = h.modulus;
  r.fixing = h;
  r.degree = euler_phi(h.modulus) / h.size();
  if (auto x = detail::find_primitive_element(h)) {
    RatPoly mp = minimal_polynomial(*x);
    if (mp.size() == r.degree + 1) {
      r.primitive_element = std::move(x);
      r.minimal_polynomial = std::move(mp);
    }
  }
  return r;
}

inline FieldReport splitting_field(const ColourFunction& f) { return field_report(compute_H_f(f)); }

/// Intersection of the stabilizers of all eigenvalues.
inline UnitSubgroup eigenvalue_stabilizer(const Spectrum& spec) {
  const std::size_t n = spec.conductor;
  std::vector<std::size_t> members = units_mod(n).members;
  for (const auto& e : spec.entries) {
    std::vector<std::size_t> keep;
    for (std::size_t h : members)
      if (galois_apply(h, e.value) == e.value) keep.push_back(h);
    members = std::move(keep);
  }
  return subgroup_from_members(n, std::move(members));
}

/// The two sides of H_f = Gal-fixer of the splitting field, computed on
/// independent paths: power maps on the group versus the Galois action on
/// the exact eigenvalues.
inline bool verify_H_equals_stabilizers(const ColourFunction& f, const Spectrum& spec) {
  return eigenvalue_stabilizer(spec) == compute_H_f(f);
}

/// All eigenvalues lie in the fixed field K of H_K.
inline bool is_algebraically_integral_over(const ColourFunction& f, const UnitSubgroup& h_k) {
  if (h_k.modulus != f.order())
    throw Error(ErrorKind::InvalidArgument, "subgroup modulus differs from the group order");
  for (std::size_t h : h_k.members)
    if (!fixed_by_power_map(f, static_cast<long long>(h))) return false;
  return true;
}

enum class VerdictSource { Exact, AlgebraicInteger, Numeric };

struct IntegralityVerdict {
  bool rational = false;
  bool integral = false;
  VerdictSource source = VerdictSource::Exact;
};

/// rational iff H_f is all of Z_n^*; integral iff additionally every
/// eigenvalue is an integer. With an exact spectrum that is read off
/// directly. Without one, an integer-valued f settles it (its eigenvalues
/// are algebraic integers), otherwise the numeric spectrum is rounded at
/// 1e-6.
inline IntegralityVerdict integrality_verdict(const ColourFunction& f, const Spectrum* exact = nullptr) {
  IntegralityVerdict v;
  v.rational = compute_H_f(f).size() == euler_phi(f.order());
  if (exact) {
    v.source = VerdictSource::Exact;
    bool all_rational = true, all_integer = true;
    for (const auto& e : exact->entries) {
      all_rational = all_rational && e.value.is_rational();
      all_integer = all_integer && e.value.is_integer();
    }
    if (all_rational != v.rational)
      throw Error(ErrorKind::InternalInconsistency, "rationality of the spectrum disagrees with H_f");
    v.integral = v.rational && all_integer;
    if (v.rational && f.is_integer_valued() && !v.integral)
      throw Error(ErrorKind::InternalInconsistency, "integer colour with rational non-integer eigenvalue");
    return v;
  }
  if (!v.rational) return v;
  const auto numeric = spectrum_numeric(f);
  bool near_integers = true;
  for (double x : numeric.values) near_integers = near_integers && std::abs(x - std::round(x)) < 1e-6;
  if (f.is_integer_valued()) {
    if (!near_integers)
      throw Error(ErrorKind::InternalInconsistency, "integer colour with rational spectrum is not numerically integral");
    v.source = VerdictSource::AlgebraicInteger;
    v.integral = true;
  } else {
    v.source = VerdictSource::Numeric;
    v.integral = near_integers;
  }
  return v;
}

/// { h in Z_n^* : S^h = S as multisets }, directly on multiplicities.
inline UnitSubgroup multiset_H_star_direct(const ConnectionMultiset& s) {
  const Group& g = s.group();
  const std::size_t n = g.order();
  std::vector<std::size_t> members;
  for (std::size_t h : units_mod(n).members) {
    std::vector<std::size_t> image(n, 0);
    for (Element x = 0; x < n; ++x) image[g.power(x, static_cast<long long>(h))] += s(x);
    if (image == s.multiplicities()) members.push_back(h);
  }
  return subgroup_from_members(n, std::move(members));
}

/// H* for a normal multiset, checked against H_{m_S}.
inline UnitSubgroup multiset_H_star(const ConnectionMultiset& s) {
  require_normal(s);
  UnitSubgroup direct = multiset_H_star_direct(s);
  if (!(direct == compute_H_f(colour_from_multiset(s))))
    throw Error(ErrorKind::InternalInconsistency, "H* differs from H_{m_S}");
  return direct;
}

/// { h : S_i^h = S_i for every distance layer }.
inline UnitSubgroup layer_subgroup(const Group& g, const std::vector<std::vector<Element>>& layers) {
  const std::size_t n = g.order();
  std::vector<std::size_t> layer_of(n);
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (Element x : layers[i]) layer_of[x] = i;
  std::vector<std::size_t> members;
  for (std::size_t h : units_mod(n).members) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = layer_of[g.power(x, static_cast<long long>(h))] == layer_of[x];
    if (ok) members.push_back(h);
  }
  return subgroup_from_members(n, std::move(members));
}

struct DistanceReport {
  DistanceColour distance;
  UnitSubgroup h_prime;
  FieldReport field;
  std::optional<Spectrum> spectrum;     // distance spectrum, when a table exists
  std::vector<Cyclotomic> layered_form;  // mu_i from the layer sums, per irreducible
};

struct DistanceOptions {
  bool exact_spectrum = true;
  bool primitive_element = true;
};

/// Distance splitting field of a connected normal Cayley graph. H' is taken
/// directly from the layers and checked against H_{l_S}; when characters are
/// available the distance eigenvalues are computed from l_S and again from
/// the layered sums (1/d_i)(chi_i(S_1) + 2 chi_i(S_2) + ... + d chi_i(S_d)).
inline DistanceReport distance_report(const ConnectionMultiset& s, const DistanceOptions& opt = {}) {
  DistanceReport r{distance_colour(s.shadow()), {}, {}, std::nullopt, {}};
  const Group& g = s.group();
  r.h_prime = layer_subgroup(g, r.distance.layers);
  if (!(r.h_prime == compute_H_f(r.distance.distance)))
    throw Error(ErrorKind::InternalInconsistency, "H' differs from H_{l_S}");
  if (opt.primitive_element) {
    r.field = field_report(r.h_prime);
  } else {
    r.field.modulus = g.order();
    r.field.fixing = r.h_prime;
    r.field.degree = euler_phi(g.order()) / r.h_prime.size();
  }
  if (opt.exact_spectrum && has_character_table(g)) {
    const CharacterTable t = character_table(s.group_ptr());
    r.spectrum = spectrum_exact(r.distance.distance, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      Cyclotomic mu(t.conductor);
      for (std::size_t k = 1; k < r.distance.layers.size(); ++k) {
        Cyclotomic layer_sum(t.conductor);
        for (Element x : r.distance.layers[k]) layer_sum += t.value(i, x);
        mu += layer_sum * Rational(k);
      }
      mu /= Rational(t.rows[i].degree);
      if (!(mu == r.spectrum->per_irreducible[i].value))
        throw Error(ErrorKind::InternalInconsistency, "layered distance eigenvalue disagrees for " + t.rows[i].label);
      r.layered_form.push_back(std::move(mu));
    }
  }
  return r;
}

/// H_f restricted to a subgroup: { h in H_K : f^h = f }.
inline UnitSubgroup relative_fixer(const ColourFunction& f, const UnitSubgroup& h_k) {
  std::vector<std::size_t> members;
  for (std::size_t h : h_k.members)
    if (fixed_by_power_map(f, static_cast<long long>(h))) members.push_back(h);
  return subgroup_from_members(h_k.modulus, std::move(members));
}

namespace detail {

// Eigenvalue-side reading of integrality over K when characters exist.
inline bool spectrum_in_fixed_field(const ColourFunction& f, const UnitSubgroup& h_k) {
  if (!has_character_table(f.group())) return is_algebraically_integral_over(f, h_k);
  const Spectrum spec = spectrum_exact(f, character_table(f.group_ptr()));
  for (const auto& e : spec.entries)
    for (std::size_t h : h_k.members)
      if (!(galois_apply(h, e.value) == e.value)) return false;
  return true;
}

}  // namespace detail

/// Given H_alpha(K) = H_beta(K), Gamma_alpha is integral over K iff
/// Gamma_beta is. Both sides are computed from the spectra (or from the
/// power maps when no character table exists) and must agree.
inline bool transfer_check(const ColourFunction& alpha, const ColourFunction& beta, const UnitSubgroup& h_k) {
  if (!(relative_fixer(alpha, h_k) == relative_fixer(beta, h_k)))
    throw Error(ErrorKind::HypothesisFails, "H_alpha(K) != H_beta(K)");
  const bool a = detail::spectrum_in_fixed_field(alpha, h_k);
  const bool b = detail::spectrum_in_fixed_field(beta, h_k);
  if (a != b) throw Error(ErrorKind::InternalInconsistency, "integrality over K differs between alpha and beta");
  return a;
}

}  // namespace cayley

#endif  // CAYLEY_GALOIS_HPP
