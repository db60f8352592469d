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

#ifndef CAYLEY_EXACTNUM_HPP
#define CAYLEY_EXACTNUM_HPP

#include <atomic>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace cayley {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Coefficients in ascending degree order.
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p/q" or an integer literal. Returns false on malformed input or a
/// zero denominator.
inline bool parse_rational(std::string_view text, Rational& out) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) return false;
    out = Rational(to_int(text));
    return true;
  }
  auto num = text.substr(0, slash), den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') return false;
  Integer d = to_int(den);
  if (d == 0) return false;
  out = Rational(to_int(num), d);
  return true;
}

inline std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace detail {

inline void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// Division by a monic divisor; throws unless exact.
inline IntPoly exact_div(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error(ErrorKind::InternalInconsistency, "polynomial division degree");
  IntPoly q(num.size() - dd, Integer(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    Integer c = num[i];
    q[i - dd] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw Error(ErrorKind::InternalInconsistency, "cyclotomic division is not exact");
  trim(q);
  return q;
}

}  // namespace detail

/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline IntPoly cyclotomic_polynomial(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  IntPoly num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  IntPoly den{Integer(1)};
  for (std::size_t d : divisors(n))
    if (d < n) den = detail::mul(den, cyclotomic_polynomial(d));
  return detail::exact_div(std::move(num), den);
}

/// Upper bound on the total number of coefficient bits carried by a single
/// cyclotomic value; exceeding it raises CoefficientBudgetExceeded.
inline std::atomic<std::size_t>& coefficient_bit_budget() {
  static std::atomic<std::size_t> budget{1'000'000};
  return budget;
}

/// Q(zeta_n) with the power basis 1, zeta, ..., zeta^{phi(n)-1}. Holds the
/// residue of every zeta^k (0 <= k < n) modulo Phi_n so that reduction is a
/// table lookup.
class CyclotomicField {
 public:
  explicit CyclotomicField(std::size_t n) : n_(n), phi_(euler_phi(n)), poly_(cyclotomic_polynomial(n)) {
    residues_.resize(n);
    IntPoly cur(phi_, Integer(0));
    cur[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < phi_; ++i) {
        if (cur[i] == 0) continue;
        if (cur[i] > std::numeric_limits<long long>::max() || cur[i] < std::numeric_limits<long long>::min())
          throw Error(ErrorKind::CoefficientBudgetExceeded, "power residue overflow for n = " + std::to_string(n));
        residues_[k].emplace_back(i, cur[i].convert_to<long long>());
      }
      // cur <- x * cur mod Phi_n
      Integer top = cur[phi_ - 1];
      for (std::size_t i = phi_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (std::size_t i = 0; i < phi_; ++i) cur[i] -= top * poly_[i];
    }
  }

  std::size_t conductor() const { return n_; }
  std::size_t degree() const { return phi_; }
  const IntPoly& modulus() const { return poly_; }
  const std::vector<std::pair<std::size_t, long long>>& residue(std::size_t k) const { return residues_[k % n_]; }

 private:
  std::size_t n_;
  std::size_t phi_;
  IntPoly poly_;
  std::vector<std::vector<std::pair<std::size_t, long long>>> residues_;
};

inline std::shared_ptr<const CyclotomicField> cyclotomic_field(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const CyclotomicField>> cache;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CyclotomicField>(n);
  return slot;
}

/// An element of Q(zeta_n) held as its canonical residue modulo Phi_n. Two
/// values are equal exactly when their coefficient vectors are.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(std::size_t n) : field_(cyclotomic_field(n)), coeffs_(field_->degree(), Rational(0)) {}

  static Cyclotomic rational(std::size_t n, const Rational& q) {
    Cyclotomic x(n);
    x.coeffs_[0] = q;
    return x;
  }

  static Cyclotomic zeta_power(std::size_t n, long long k) {
    std::map<long long, Rational> m;
    m[k] = 1;
    return from_exponents(n, m);
  }

  /// sum of coeff * zeta_n^exponent; exponents may be any integers.
  static Cyclotomic from_exponents(std::size_t n, const std::map<long long, Rational>& terms) {
    std::vector<Rational> raw(n, Rational(0));
    const auto nn = static_cast<long long>(n);
    for (const auto& [e, c] : terms) raw[static_cast<std::size_t>(((e % nn) + nn) % nn)] += c;
    return reduce(cyclotomic_field(n), raw);
  }

  std::size_t conductor() const { return field_->conductor(); }
  Cyclotomic zero_like() const { return Cyclotomic(field_); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  bool is_integer() const { return is_rational() && denominator(coeffs_[0]) == 1; }

  /// Only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  Cyclotomic& operator/=(const Rational& q) {
    if (q == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
    for (auto& c : coeffs_) c /= q;
    return *this;
  }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& q) { return a /= q; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    a.check(b);
    const std::size_t n = a.conductor();
    std::vector<Rational> raw(n, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        raw[(i + j) % n] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return reduce(a.field_, raw);
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
  }

  /// Lexicographic on coefficients; a deterministic tie-breaker only.
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor();
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
  }

  /// The substitution zeta -> zeta^h followed by re-reduction.
  Cyclotomic power_substitute(std::size_t h) const {
    const std::size_t n = conductor();
    std::vector<Rational> raw(n, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) raw[(i * (h % n)) % n] += coeffs_[i];
    return reduce(field_, raw);
  }

  /// Image under Q(zeta_n) -> Q(zeta_N), zeta_n -> zeta_N^{N/n}; requires n | N.
  Cyclotomic embed(std::size_t target) const {
    const std::size_t n = conductor();
    if (target % n != 0)
      throw Error(ErrorKind::ConductorMismatch, std::to_string(n) + " does not divide " + std::to_string(target));
    const std::size_t step = target / n;
    std::vector<Rational> raw(target, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) raw[i * step] += coeffs_[i];
    return reduce(cyclotomic_field(target), raw);
  }

  std::complex<double> to_complex() const {
    std::complex<double> z{0.0, 0.0};
    const double n = static_cast<double>(conductor());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] == 0) continue;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
      z += coeffs_[i].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return z;
  }

  /// Power-basis form, e.g. "2/5*z16^2 - 2/5*z16^6".
  std::string to_string() const {
    std::string out;
    const std::string z = "z" + std::to_string(conductor());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (i == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += z;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  explicit Cyclotomic(std::shared_ptr<const CyclotomicField> field)
      : field_(std::move(field)), coeffs_(field_->degree(), Rational(0)) {}

  static Cyclotomic reduce(const std::shared_ptr<const CyclotomicField>& field, const std::vector<Rational>& raw) {
    Cyclotomic x(field);
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k] == 0) continue;
      for (const auto& [i, c] : field->residue(k)) x.coeffs_[i] += raw[k] * c;
    }
    x.check_budget();
    return x;
  }

  void check(const Cyclotomic& o) const {
    if (conductor() != o.conductor())
      throw Error(ErrorKind::ConductorMismatch,
                  "Q(zeta_" + std::to_string(conductor()) + ") vs Q(zeta_" + std::to_string(o.conductor()) + ")");
  }

  void check_budget() const {
    std::size_t bits = 0;
    for (const auto& c : coeffs_) {
      if (c == 0) continue;
      bits += boost::multiprecision::msb(abs(numerator(c))) + 1;
      bits += boost::multiprecision::msb(denominator(c)) + 1;
    }
    if (bits > coefficient_bit_budget().load())
      throw Error(ErrorKind::CoefficientBudgetExceeded, std::to_string(bits) + " coefficient bits");
  }

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

/// A subgroup of the unit group Z_n^*, identified with Gal(Q(zeta_n)/Q) via
/// h <-> (zeta -> zeta^h). Members are sorted; generators are a greedy
/// minimal-ish set. Z_1^* is represented as {1}.
struct UnitSubgroup {
  std::size_t modulus = 1;
  std::vector<std::size_t> members{1};
  std::vector<std::size_t> generators;

  std::size_t size() const { return members.size(); }
  bool contains(std::size_t h) const { return std::binary_search(members.begin(), members.end(), h); }
  bool is_subgroup_of(const UnitSubgroup& o) const {
    return modulus == o.modulus && std::includes(o.members.begin(), o.members.end(), members.begin(), members.end());
  }
  friend bool operator==(const UnitSubgroup& a, const UnitSubgroup& b) {
    return a.modulus == b.modulus && a.members == b.members;
  }
};

using UnitGroup = UnitSubgroup;

inline bool is_unit(std::size_t h, std::size_t n) { return n == 1 || std::gcd(h % n, n) == 1; }

inline std::size_t reduce_unit(long long h, std::size_t n) {
  const auto nn = static_cast<long long>(n);
  std::size_t r = static_cast<std::size_t>(((h % nn) + nn) % nn);
  return n == 1 ? 1 : r;
}

namespace detail {

inline std::vector<std::size_t> closure_of(std::size_t n, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(std::max<std::size_t>(n, 2), false);
  std::vector<std::size_t> out{1 % std::max<std::size_t>(n, 2)};
  if (n == 1) return {1};
  in[1] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t g : gens) {
      std::size_t y = (out[i] * g) % n;
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> greedy_generators(std::size_t n, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{1};
  for (std::size_t h : members) {
    if (std::binary_search(span.begin(), span.end(), h)) continue;
    gens.push_back(h);
    span = closure_of(n, gens);
  }
  return gens;
}

}  // namespace detail

/// Subgroup generated by the given units (reduced mod n). An empty list
/// yields the trivial subgroup.
inline UnitSubgroup close_units(std::size_t n, const std::vector<long long>& gens) {
  std::vector<std::size_t> reduced;
  for (long long g : gens) {
    std::size_t h = reduce_unit(g, n);
    if (!is_unit(h, n)) throw Error(ErrorKind::NotAUnit, std::to_string(g) + " is not a unit mod " + std::to_string(n));
    reduced.push_back(h);
  }
  UnitSubgroup s;
  s.modulus = n;
  s.members = detail::closure_of(n, reduced);
  s.generators = detail::greedy_generators(n, s.members);
  return s;
}

/// Builds a subgroup record from a member list already known to be closed.
inline UnitSubgroup subgroup_from_members(std::size_t n, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  if (detail::closure_of(n, members) != members)
    throw Error(ErrorKind::InternalInconsistency, "unit set is not a subgroup mod " + std::to_string(n));
  UnitSubgroup s;
  s.modulus = n;
  s.members = std::move(members);
  s.generators = detail::greedy_generators(n, s.members);
  return s;
}

inline UnitGroup units_mod(std::size_t n) {
  std::vector<std::size_t> u;
  if (n == 1) u.push_back(1);
  for (std::size_t h = 1; h < n; ++h)
    if (std::gcd(h, n) == 1) u.push_back(h);
  return subgroup_from_members(n, std::move(u));
}

inline Cyclotomic galois_apply(std::size_t h, const Cyclotomic& x) {
  const std::size_t n = x.conductor();
  if (!is_unit(h, n)) throw Error(ErrorKind::NotAUnit, std::to_string(h) + " is not a unit mod " + std::to_string(n));
  return x.power_substitute(h);
}

inline UnitSubgroup stabilizer(const Cyclotomic& x) {
  const std::size_t n = x.conductor();
  std::vector<std::size_t> fixed;
  for (std::size_t h : units_mod(n).members)
    if (galois_apply(h, x) == x) fixed.push_back(h);
  return subgroup_from_members(n, std::move(fixed));
}

/// Distinct Galois conjugates of x, in order of first appearance over the
/// sorted units.
inline std::vector<Cyclotomic> galois_orbit(const Cyclotomic& x) {
  std::vector<Cyclotomic> orbit;
  for (std::size_t h : units_mod(x.conductor()).members) {
    Cyclotomic y = galois_apply(h, x);
    if (std::find(orbit.begin(), orbit.end(), y) == orbit.end()) orbit.push_back(std::move(y));
  }
  return orbit;
}

/// Product of (t - y) over the Galois orbit of x, checked to have rational
/// coefficients.
inline RatPoly minimal_polynomial(const Cyclotomic& x) {
  const std::size_t n = x.conductor();
  std::vector<Cyclotomic> poly{Cyclotomic::rational(n, 1)};
  for (const auto& root : galois_orbit(x)) {
    std::vector<Cyclotomic> next(poly.size() + 1, Cyclotomic(n));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * root;
    }
    poly = std::move(next);
  }
  RatPoly out;
  for (const auto& c : poly) {
    if (!c.is_rational())
      throw Error(ErrorKind::InternalInconsistency, "minimal polynomial coefficient " + c.to_string() + " is not rational");
    out.push_back(c.rational_part());
  }
  return out;
}

inline Cyclotomic evaluate(const RatPoly& p, const Cyclotomic& x) {
  Cyclotomic acc(x.conductor());
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Cyclotomic::rational(x.conductor(), p[i]);
  return acc;
}

/// "t^2 - 8" style rendering in the variable t.
inline std::string poly_to_string(const RatPoly& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (i == 0 || mag != 1) out += mag.str();
    if (i > 0 && mag != 1) out += "*";
    if (i > 0) out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline Cyclotomic to_cyclotomic(std::size_t n, const Rational& q) { return Cyclotomic::rational(n, q); }

inline std::complex<double> to_complex(const Cyclotomic& x) { return x.to_complex(); }

}  // namespace cayley

#endif  // CAYLEY_EXACTNUM_HPP
