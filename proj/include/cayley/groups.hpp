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

#ifndef CAYLEY_GROUPS_HPP
#define CAYLEY_GROUPS_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace cayley {

using Element = std::uint32_t;

enum class Family { Cyclic, Dihedral, Product, Generated };

/// Conjugacy classes ordered by least member, so the identity class is
/// always class 0. Each class lists its members in ascending index order and
/// uses the least member as representative.
struct ConjugacyClassPartition {
  std::vector<std::vector<Element>> classes;
  std::vector<Element> representative;
  std::vector<std::size_t> class_of;

  std::size_t size() const { return classes.size(); }
};

namespace detail {

// Canonical spelling used for name lookup: whitespace runs collapse to a
// single space and disappear entirely next to punctuation.
inline std::string normalize_name(std::string_view raw) {
  std::string out;
  bool pending_space = false;
  auto is_word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  for (char c : raw) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space && is_word(c) && is_word(out.back())) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group on dense element indices 0..n-1 with 0 the identity.
///
/// Multiplication is served from a precomputed table when the order is at
/// most kTableLimit and from the constructor-supplied rule otherwise. Groups
/// are immutable once built.
class Group {
 public:
  static constexpr std::size_t kTableLimit = 4096;

  using MulFn = std::function<Element(Element, Element)>;
  using InvFn = std::function<Element(Element)>;

  struct Spec {
    Family family = Family::Generated;
    std::string descriptor;
    std::size_t order = 1;
    std::vector<std::string> names;
    std::vector<Element> generators;
    MulFn mul;
    InvFn inv;
    std::size_t parameter = 0;
    std::vector<GroupPtr> factors;
    std::vector<std::pair<std::string, Element>> aliases;
  };

  explicit Group(Spec spec)
      : family_(spec.family),
        descriptor_(std::move(spec.descriptor)),
        order_(spec.order),
        parameter_(spec.parameter),
        names_(std::move(spec.names)),
        generators_(std::move(spec.generators)),
        factors_(std::move(spec.factors)),
        mul_fn_(std::move(spec.mul)) {
    if (order_ == 0) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
    if (names_.size() != order_) throw Error(ErrorKind::InvalidArgument, "one name per element required");
    inverse_.resize(order_);
    for (Element g = 0; g < order_; ++g) inverse_[g] = spec.inv(g);
    if (order_ <= kTableLimit) {
      table_.resize(order_ * order_);
      for (Element g = 0; g < order_; ++g)
        for (Element h = 0; h < order_; ++h) table_[g * order_ + h] = mul_fn_(g, h);
    }
    for (Element g = 0; g < order_; ++g) lookup_.emplace(detail::normalize_name(names_[g]), g);
    for (auto& [alias, g] : spec.aliases) lookup_.emplace(detail::normalize_name(alias), g);
    compute_classes();
  }

  std::size_t order() const { return order_; }
  Family family() const { return family_; }
  /// n for cyclic groups, m for the dihedral group of order 2m, 0 otherwise.
  std::size_t parameter() const { return parameter_; }
  const std::string& descriptor() const { return descriptor_; }
  std::span<const GroupPtr> factors() const { return factors_; }
  std::span<const Element> generators() const { return generators_; }

  static constexpr Element identity() { return 0; }

  Element mul(Element g, Element h) const {
    return table_.empty() ? mul_fn_(g, h) : table_[static_cast<std::size_t>(g) * order_ + h];
  }

  Element inverse(Element g) const { return inverse_[g]; }

  /// g^k by square-and-multiply; negative k powers the inverse.
  Element power(Element g, long long k) const {
    unsigned long long e;
    if (k < 0) {
      g = inverse(g);
      e = static_cast<unsigned long long>(-(k + 1)) + 1;
    } else {
      e = static_cast<unsigned long long>(k);
    }
    Element result = identity();
    Element base = g;
    while (e != 0) {
      if (e & 1ULL) result = mul(result, base);
      e >>= 1;
      if (e != 0) base = mul(base, base);
    }
    return result;
  }

  std::size_t element_order(Element g) const {
    std::size_t k = 1;
    for (Element x = g; x != identity(); x = mul(x, g)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (Element g : generators_)
      for (Element h : generators_)
        if (mul(g, h) != mul(h, g)) return false;
    return true;
  }

  const std::string& name(Element g) const { return names_.at(g); }
  std::span<const std::string> names() const { return names_; }

  std::optional<Element> find(std::string_view name) const {
    auto it = lookup_.find(detail::normalize_name(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }

  Element at(std::string_view name) const {
    if (auto g = find(name)) return *g;
    throw Error(ErrorKind::UnknownElement, "no element named '" + std::string(name) + "' in " + descriptor_);
  }

  const ConjugacyClassPartition& classes() const { return classes_; }

  Element conjugate(Element x, Element by) const { return mul(mul(by, x), inverse(by)); }

 private:
  // Conjugation orbits under the generators are exactly the classes.
  void compute_classes() {
    classes_.class_of.assign(order_, SIZE_MAX);
    for (Element start = 0; start < order_; ++start) {
      if (classes_.class_of[start] != SIZE_MAX) continue;
      const std::size_t id = classes_.classes.size();
      std::vector<Element> orbit{start};
      classes_.class_of[start] = id;
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (Element s : generators_) {
          Element y = conjugate(orbit[i], s);
          if (classes_.class_of[y] == SIZE_MAX) {
            classes_.class_of[y] = id;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      classes_.representative.push_back(orbit.front());
      classes_.classes.push_back(std::move(orbit));
    }
  }

  Family family_;
  std::string descriptor_;
  std::size_t order_;
  std::size_t parameter_;
  std::vector<std::string> names_;
  std::vector<Element> generators_;
  std::vector<GroupPtr> factors_;
  MulFn mul_fn_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::unordered_map<std::string, Element> lookup_;
  ConjugacyClassPartition classes_;
};

inline GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  Group::Spec spec;
  spec.family = Family::Cyclic;
  spec.descriptor = "cyclic:" + std::to_string(n);
  spec.order = n;
  spec.parameter = n;
  for (std::size_t k = 0; k < n; ++k) spec.names.push_back(std::to_string(k));
  if (n > 1) spec.generators = {1};
  spec.mul = [n](Element g, Element h) { return static_cast<Element>((g + h) % n); };
  spec.inv = [n](Element g) { return static_cast<Element>((n - g) % n); };
  return std::make_shared<const Group>(std::move(spec));
}

/// D_m = <a, b | a^m = b^2 = 1, ab = ba^{-1}>, order 2m. Index k is a^k and
/// index m + k is b*a^k.
inline GroupPtr make_dihedral(std::size_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "dihedral parameter must be positive");
  Group::Spec spec;
  spec.family = Family::Dihedral;
  spec.descriptor = "dihedral:" + std::to_string(m);
  spec.order = 2 * m;
  spec.parameter = m;
  auto rot = [](std::size_t k) { return k == 0 ? std::string("1") : k == 1 ? std::string("a") : "a^" + std::to_string(k); };
  for (std::size_t k = 0; k < m; ++k) spec.names.push_back(rot(k));
  for (std::size_t k = 0; k < m; ++k) spec.names.push_back(k == 0 ? std::string("b") : "b*" + rot(k));
  for (std::size_t k = 0; k < m; ++k) {
    const auto e = static_cast<Element>(k), r = static_cast<Element>(m + k);
    const std::string ks = std::to_string(k);
    spec.aliases.emplace_back("a^" + ks, e);
    spec.aliases.emplace_back("b*a^" + ks, r);
    spec.aliases.emplace_back("ba^" + ks, r);
    if (k == 1) spec.aliases.emplace_back("ba", r);
  }
  spec.generators = m > 1 ? std::vector<Element>{1, static_cast<Element>(m)} : std::vector<Element>{static_cast<Element>(m)};
  spec.mul = [m](Element g, Element h) -> Element {
    const bool gr = g >= m, hr = h >= m;
    const std::size_t i = gr ? g - m : g, j = hr ? h - m : h;
    if (!gr && !hr) return static_cast<Element>((i + j) % m);
    if (!gr && hr) return static_cast<Element>(m + (j + m - i) % m);
    if (gr && !hr) return static_cast<Element>(m + (i + j) % m);
    return static_cast<Element>((j + m - i) % m);
  };
  spec.inv = [m](Element g) -> Element { return g >= m ? g : static_cast<Element>((m - g) % m); };
  return std::make_shared<const Group>(std::move(spec));
}

/// Direct product; the pair (x, y) has index x * |H| + y.
inline GroupPtr make_product(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t ng = g->order(), nh = h->order();
  Group::Spec spec;
  spec.family = Family::Product;
  spec.descriptor = "product(" + g->descriptor() + "," + h->descriptor() + ")";
  spec.order = ng * nh;
  for (std::size_t x = 0; x < ng; ++x)
    for (std::size_t y = 0; y < nh; ++y)
      spec.names.push_back("(" + g->name(static_cast<Element>(x)) + "," + h->name(static_cast<Element>(y)) + ")");
  for (Element s : g->generators()) spec.generators.push_back(static_cast<Element>(s * nh));
  for (Element s : h->generators()) spec.generators.push_back(s);
  spec.mul = [g, h, nh](Element p, Element q) {
    return static_cast<Element>(g->mul(p / nh, q / nh) * nh + h->mul(p % nh, q % nh));
  };
  spec.inv = [g, h, nh](Element p) { return static_cast<Element>(g->inverse(p / nh) * nh + h->inverse(p % nh)); };
  spec.factors = {g, h};
  return std::make_shared<const Group>(std::move(spec));
}

using Permutation = std::vector<std::uint32_t>;

namespace detail {

inline std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? std::string("1") : out;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = p.size();
    for (auto v : p) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace detail

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure of a permutation group. Generators of unequal
/// length are padded with fixed points. The product xy applies x first.
inline GroupPtr make_from_generators(std::vector<Permutation> gens, std::size_t cap = kDefaultClosureCap) {
  std::size_t degree = 0;
  for (const auto& p : gens) degree = std::max(degree, p.size());
  for (auto& p : gens) {
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= p.size() || hit[v]) throw Error(ErrorKind::InvalidArgument, "generator is not a bijection");
      hit[v] = true;
    }
    for (std::size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<std::uint32_t>(i));
  }
  auto compose = [](const Permutation& x, const Permutation& y) {
    Permutation r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };

  auto elements = std::make_shared<std::vector<Permutation>>();
  auto index = std::make_shared<std::unordered_map<Permutation, Element, detail::PermutationHash>>();
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  elements->push_back(id);
  index->emplace(id, 0);
  std::vector<Element> gen_index;
  for (std::size_t i = 0; i < elements->size(); ++i) {
    for (const auto& s : gens) {
      Permutation next = compose((*elements)[i], s);
      if (index->count(next)) continue;
      if (elements->size() >= cap)
        throw Error(ErrorKind::ClosureCapExceeded, "closure exceeds " + std::to_string(cap) + " elements");
      index->emplace(next, static_cast<Element>(elements->size()));
      elements->push_back(std::move(next));
    }
  }
  for (const auto& s : gens) {
    Element e = index->at(s);
    if (e != 0 && std::find(gen_index.begin(), gen_index.end(), e) == gen_index.end()) gen_index.push_back(e);
  }

  Group::Spec spec;
  spec.family = Family::Generated;
  spec.order = elements->size();
  spec.descriptor = "generated:" + std::to_string(spec.order);
  for (const auto& p : *elements) spec.names.push_back(detail::cycle_notation(p));
  spec.generators = std::move(gen_index);
  spec.mul = [elements, index, compose](Element g, Element h) { return index->at(compose((*elements)[g], (*elements)[h])); };
  spec.inv = [elements, index](Element g) {
    const auto& p = (*elements)[g];
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
    return index->at(r);
  };
  return std::make_shared<const Group>(std::move(spec));
}

inline const ConjugacyClassPartition& conjugacy_classes(const Group& g) { return g.classes(); }

/// True iff the multiplicity function (one count per element index) is
/// constant on conjugacy classes.
inline bool is_normal_subset(const Group& g, std::span<const std::size_t> multiplicity) {
  const auto& cc = g.classes();
  for (const auto& cls : cc.classes)
    for (Element x : cls)
      if (multiplicity[x] != multiplicity[cls.front()]) return false;
  return true;
}

inline std::vector<std::size_t> multiplicities_of(const Group& g, std::span<const Element> multiset) {
  std::vector<std::size_t> m(g.order(), 0);
  for (Element x : multiset) ++m.at(x);
  return m;
}

inline bool is_normal_subset(const Group& g, std::span<const Element> multiset) {
  auto m = multiplicities_of(g, multiset);
  return is_normal_subset(g, std::span<const std::size_t>(m));
}

}  // namespace cayley

#endif  // CAYLEY_GROUPS_HPP
