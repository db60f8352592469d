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

#ifndef CAYLEY_COLOUR_HPP
#define CAYLEY_COLOUR_HPP

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "exactnum.hpp"
#include "groups.hpp"

namespace cayley {

namespace detail {

inline std::optional<Element> first_asymmetric(const Group& g, std::span<const Rational> v) {
  for (Element x = 0; x < g.order(); ++x)
    if (v[x] != v[g.inverse(x)]) return x;
  return std::nullopt;
}

inline std::optional<std::pair<Element, Element>> first_class_violation(const Group& g, std::span<const Rational> v) {
  for (const auto& cls : g.classes().classes)
    for (Element x : cls)
      if (v[x] != v[cls.front()]) return std::make_pair(cls.front(), x);
  return std::nullopt;
}

}  // namespace detail

/// A rational-valued symmetric class function on a group: the colouring of
/// the Cayley colour graph whose adjacency matrix is [f(g h^{-1})].
class ColourFunction {
 public:
  /// Validates symmetry and class-constancy.
  ColourFunction(GroupPtr group, std::vector<Rational> values) : group_(std::move(group)), values_(std::move(values)) {
    if (values_.size() != group_->order())
      throw Error(ErrorKind::InvalidArgument, "colour needs one value per element");
    if (auto x = detail::first_asymmetric(*group_, values_))
      throw Error(ErrorKind::NotSymmetric, "f(" + group_->name(*x) + ") != f(" + group_->name(group_->inverse(*x)) + ")");
    if (auto p = detail::first_class_violation(*group_, values_))
      throw Error(ErrorKind::NotClassFunction,
                  "f(" + group_->name(p->first) + ") != f(" + group_->name(p->second) + ") but they are conjugate");
  }

  const GroupPtr& group_ptr() const { return group_; }
  const Group& group() const { return *group_; }
  std::size_t order() const { return group_->order(); }
  const Rational& operator()(Element g) const { return values_[g]; }
  const std::vector<Rational>& values() const { return values_; }

  bool is_integer_valued() const {
    for (const auto& v : values_)
      if (denominator(v) != 1) return false;
    return true;
  }

  friend bool operator==(const ColourFunction& a, const ColourFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  GroupPtr group_;
  std::vector<Rational> values_;
};

/// Unmentioned elements default to zero.
inline ColourFunction colour_from_values(const GroupPtr& g, const std::map<Element, Rational>& values) {
  std::vector<Rational> v(g->order(), Rational(0));
  for (const auto& [x, q] : values) v.at(x) = q;
  return ColourFunction(g, std::move(v));
}

/// f^h(g) = f(g^h). Class functions stay class functions under pullback, so
/// the result passes the same validation as its source.
inline ColourFunction pullback(const ColourFunction& f, long long h) {
  const Group& g = f.group();
  std::vector<Rational> v(g.order());
  for (Element x = 0; x < g.order(); ++x) v[x] = f(g.power(x, h));
  return ColourFunction(f.group_ptr(), std::move(v));
}

/// True iff f(g^h) = f(g) for every g; avoids materialising the pullback.
inline bool fixed_by_power_map(const ColourFunction& f, long long h) {
  const Group& g = f.group();
  for (Element x = 0; x < g.order(); ++x)
    if (f(g.power(x, h)) != f(x)) return false;
  return true;
}

/// |C_i| * f(rep_i) in canonical class order.
inline std::vector<Rational> delta_vector(const ColourFunction& f) {
  const auto& cc = f.group().classes();
  std::vector<Rational> d;
  d.reserve(cc.size());
  for (std::size_t i = 0; i < cc.size(); ++i) d.push_back(Rational(cc.classes[i].size()) * f(cc.representative[i]));
  return d;
}

/// An inverse-closed multiset on G \ {1}, stored as one multiplicity per
/// element index.
class ConnectionMultiset {
 public:
  ConnectionMultiset(GroupPtr group, std::vector<std::size_t> multiplicity)
      : group_(std::move(group)), mult_(std::move(multiplicity)) {
    if (mult_.size() != group_->order())
      throw Error(ErrorKind::InvalidArgument, "multiplicity needs one entry per element");
    if (mult_[Group::identity()] != 0) throw Error(ErrorKind::InvalidConnection, "connection set contains the identity");
    for (Element x = 0; x < group_->order(); ++x)
      if (mult_[x] != mult_[group_->inverse(x)])
        throw Error(ErrorKind::InvalidConnection,
                    "m(" + group_->name(x) + ") != m(" + group_->name(group_->inverse(x)) + "): not inverse-closed");
  }

  static ConnectionMultiset from_elements(const GroupPtr& g, std::span<const Element> elements) {
    return ConnectionMultiset(g, multiplicities_of(*g, elements));
  }

  const GroupPtr& group_ptr() const { return group_; }
  const Group& group() const { return *group_; }
  std::size_t operator()(Element g) const { return mult_[g]; }
  const std::vector<std::size_t>& multiplicities() const { return mult_; }

  std::size_t size() const {
    std::size_t s = 0;
    for (auto m : mult_) s += m;
    return s;
  }

  /// Elements with positive multiplicity, ascending.
  std::vector<Element> support() const {
    std::vector<Element> s;
    for (Element x = 0; x < mult_.size(); ++x)
      if (mult_[x] > 0) s.push_back(x);
    return s;
  }

  /// The underlying simple set (repeats removed).
  ConnectionMultiset shadow() const {
    std::vector<std::size_t> m(mult_.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = mult_[i] > 0 ? 1 : 0;
    return ConnectionMultiset(group_, std::move(m));
  }

  bool is_normal() const { return is_normal_subset(*group_, std::span<const std::size_t>(mult_)); }

  friend bool operator==(const ConnectionMultiset& a, const ConnectionMultiset& b) {
    return a.group_ == b.group_ && a.mult_ == b.mult_;
  }

 private:
  GroupPtr group_;
  std::vector<std::size_t> mult_;
};

inline void require_normal(const ConnectionMultiset& s) {
  if (s.is_normal()) return;
  const Group& g = s.group();
  for (const auto& cls : g.classes().classes)
    for (Element x : cls)
      if (s(x) != s(cls.front()))
        throw Error(ErrorKind::NotNormal, "m(" + g.name(cls.front()) + ") != m(" + g.name(x) + ") but they are conjugate");
}

/// m_S as a colour function.
inline ColourFunction colour_from_multiset(const ConnectionMultiset& s) {
  require_normal(s);
  std::vector<Rational> v(s.group().order());
  for (Element x = 0; x < v.size(); ++x) v[x] = Rational(s(x));
  return ColourFunction(s.group_ptr(), std::move(v));
}

/// Breadth-first distance from the identity in Cay(G, S). Unreached
/// elements get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const Group& g, std::span<const Element> connection) {
  std::vector<std::size_t> dist(g.order(), SIZE_MAX);
  std::vector<Element> frontier{Group::identity()};
  dist[Group::identity()] = 0;
  for (std::size_t level = 1; !frontier.empty(); ++level) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element s : connection) {
        Element y = g.mul(s, x);
        if (dist[y] == SIZE_MAX) {
          dist[y] = level;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return dist;
}

inline bool is_connected(const Group& g, std::span<const Element> connection) {
  for (auto d : bfs_distances(g, connection))
    if (d == SIZE_MAX) return false;
  return true;
}

struct DistanceColour {
  ColourFunction distance;                  // l_S
  std::vector<std::vector<Element>> layers; // S_0 = {1}, S_1 = S, ..., S_d
  std::size_t diameter = 0;
};

/// l_S(x) = word length of x over S, with its distance layers. S must be a
/// normal inverse-closed subset of G \ {1} generating G.
inline DistanceColour distance_colour(const ConnectionMultiset& s) {
  const Group& g = s.group();
  require_normal(s);
  auto support = s.support();
  auto dist = bfs_distances(g, support);
  std::string unreached;
  for (Element x = 0; x < g.order(); ++x)
    if (dist[x] == SIZE_MAX) unreached += (unreached.empty() ? "" : ", ") + g.name(x);
  if (!unreached.empty()) throw Error(ErrorKind::Disconnected, "unreached elements: " + unreached);

  DistanceColour out{ColourFunction(s.group_ptr(), std::vector<Rational>(g.order(), Rational(0))), {}, 0};
  std::vector<Rational> v(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    v[x] = Rational(dist[x]);
    out.diameter = std::max(out.diameter, dist[x]);
  }
  out.layers.resize(out.diameter + 1);
  for (Element x = 0; x < g.order(); ++x) out.layers[dist[x]].push_back(x);
  out.distance = ColourFunction(s.group_ptr(), std::move(v));
  return out;
}

inline DistanceColour distance_colour(const GroupPtr& g, std::span<const Element> connection_set) {
  return distance_colour(ConnectionMultiset::from_elements(g, connection_set).shadow());
}

}  // namespace cayley

#endif  // CAYLEY_COLOUR_HPP
