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

#ifndef CAYLEY_SEARCH_HPP
#define CAYLEY_SEARCH_HPP

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "colour.hpp"
#include "galois.hpp"
#include "groups.hpp"

namespace cayley {

enum class SearchMode { Sets, Multisets };

struct SearchSpec {
  GroupPtr group;
  SearchMode mode = SearchMode::Sets;
  std::size_t multiplicity_cap = 3;
  bool require_connected = false;
  std::optional<std::size_t> target_degree;
  std::size_t order_limit = 64;
  std::size_t max_instances = std::size_t{1} << 22;
  unsigned jobs = 1;
};

/// Non-identity conjugacy classes merged with their inverse classes, ordered
/// by least element. Every normal inverse-closed set is a union of these.
inline std::vector<std::vector<Element>> class_bundles(const Group& g) {
  const auto& cc = g.classes();
  std::vector<bool> used(cc.size(), false);
  std::vector<std::vector<Element>> bundles;
  for (std::size_t c = 1; c < cc.size(); ++c) {
    if (used[c]) continue;
    const std::size_t inv = cc.class_of[g.inverse(cc.representative[c])];
    used[c] = used[inv] = true;
    std::vector<Element> b = cc.classes[c];
    if (inv != c) b.insert(b.end(), cc.classes[inv].begin(), cc.classes[inv].end());
    std::sort(b.begin(), b.end());
    bundles.push_back(std::move(b));
  }
  return bundles;
}

namespace detail {

inline void check_spec(const SearchSpec& spec) {
  if (!spec.group) throw Error(ErrorKind::InvalidArgument, "search needs a group");
  if (spec.group->order() > spec.order_limit)
    throw Error(ErrorKind::OrderLimitExceeded, "group order " + std::to_string(spec.group->order()) + " exceeds limit " +
                                                   std::to_string(spec.order_limit));
  if (spec.mode == SearchMode::Multisets && spec.multiplicity_cap < 1)
    throw Error(ErrorKind::InvalidArgument, "multiplicity cap must be at least 1");
}

inline std::size_t radix(const SearchSpec& spec) { return spec.mode == SearchMode::Sets ? 2 : spec.multiplicity_cap + 1; }

}  // namespace detail

/// Number of non-empty (multi)sets the spec enumerates.
inline std::size_t enumeration_size(const SearchSpec& spec) {
  detail::check_spec(spec);
  const std::size_t bundles = class_bundles(*spec.group).size(), base = detail::radix(spec);
  std::size_t total = 1;
  for (std::size_t i = 0; i < bundles; ++i) {
    if (total > spec.max_instances * base)
      throw Error(ErrorKind::SearchTooLarge, "more than " + std::to_string(spec.max_instances) + " connection sets");
    total *= base;
  }
  if (total - 1 > spec.max_instances)
    throw Error(ErrorKind::SearchTooLarge, std::to_string(total - 1) + " connection sets exceed the cap of " +
                                               std::to_string(spec.max_instances));
  return total - 1;
}

/// The connection (multi)set with enumeration index `index` (1-based): the
/// digits of index in base 2 (sets) or cap+1 (multisets) give the
/// multiplicity of each bundle, least significant digit first.
inline ConnectionMultiset normal_set_at(const SearchSpec& spec, const std::vector<std::vector<Element>>& bundles,
                                        std::size_t index) {
  const std::size_t base = detail::radix(spec);
  std::vector<std::size_t> m(spec.group->order(), 0);
  for (const auto& b : bundles) {
    const std::size_t digit = index % base;
    index /= base;
    for (Element x : b) m[x] = digit;
  }
  return ConnectionMultiset(spec.group, std::move(m));
}

inline void for_each_normal_set(const SearchSpec& spec, const std::function<void(const ConnectionMultiset&)>& fn) {
  const std::size_t total = enumeration_size(spec);
  const auto bundles = class_bundles(*spec.group);
  for (std::size_t i = 1; i <= total; ++i) fn(normal_set_at(spec, bundles, i));
}

inline std::vector<ConnectionMultiset> enumerate_normal_sets(const SearchSpec& spec) {
  std::vector<ConnectionMultiset> out;
  for_each_normal_set(spec, [&](const ConnectionMultiset& s) { out.push_back(s); });
  return out;
}

struct SearchRecord {
  std::size_t index = 0;
  std::vector<std::size_t> multiplicity;
  std::size_t valency = 0;
  bool connected = false;
  std::size_t degree = 0;
  std::optional<std::size_t> distance_degree;
  std::optional<std::size_t> diameter;
  bool integral = false;
  std::optional<bool> distance_integral;
  // Cross-checks, each computed along two independent paths.
  bool h_star_matches = true;   // S^h = S as multisets  vs  m_S^h = m_S
  bool h_prime_matches = true;  // layers fixed          vs  l_S^h = l_S
  bool shadow_contains = true;  // H*(multiset) within H*(simple shadow)
};

struct SearchResult {
  std::string group;
  std::size_t order = 0;
  SearchMode mode = SearchMode::Sets;
  std::size_t enumerated = 0;
  std::vector<SearchRecord> records;
  std::map<std::size_t, std::size_t> degree_counts;
  std::map<std::size_t, std::size_t> connected_degree_counts;
  std::vector<std::size_t> counterexamples;  // set mode: indices where Deg != Deg_D
  std::size_t lemma_failures = 0;
  std::optional<std::size_t> target_degree;
  bool target_found = false;            // among all enumerated sets
  bool target_found_connected = false;  // among connected sets only
};

inline SearchRecord classify_one(const ConnectionMultiset& s, std::size_t index) {
  const Group& g = s.group();
  const std::size_t phi = euler_phi(g.order());
  SearchRecord r;
  r.index = index;
  r.multiplicity = s.multiplicities();
  r.valency = s.size();
  const UnitSubgroup h_star = multiset_H_star_direct(s);
  r.h_star_matches = h_star == compute_H_f(colour_from_multiset(s));
  r.degree = phi / h_star.size();
  r.integral = r.degree == 1;
  const ConnectionMultiset shadow = s.shadow();
  r.shadow_contains = h_star.is_subgroup_of(multiset_H_star_direct(shadow));
  const auto support = s.support();
  r.connected = is_connected(g, support);
  if (r.connected) {
    const DistanceColour dc = distance_colour(shadow);
    const UnitSubgroup h_prime = layer_subgroup(g, dc.layers);
    r.h_prime_matches = h_prime == compute_H_f(dc.distance);
    r.distance_degree = phi / h_prime.size();
    r.distance_integral = *r.distance_degree == 1;
    r.diameter = dc.diameter;
  }
  return r;
}

/// Exhaustive classification by algebraic and distance degree. Work is split
/// into contiguous index ranges, one per job, and merged in index order so
/// the result does not depend on the job count.
inline SearchResult classify(const SearchSpec& spec) {
  const std::size_t total = enumeration_size(spec);
  const auto bundles = class_bundles(*spec.group);
  const unsigned jobs = std::max(1u, std::min<unsigned>(spec.jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));

  std::vector<std::vector<SearchRecord>> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned j) {
    try {
      const std::size_t lo = 1 + total * j / jobs, hi = total * (j + 1) / jobs;
      for (std::size_t i = lo; i <= hi; ++i) {
        SearchRecord r = classify_one(normal_set_at(spec, bundles, i), i);
        if (spec.require_connected && !r.connected) continue;
        parts[j].push_back(std::move(r));
      }
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SearchResult out;
  out.group = spec.group->descriptor();
  out.order = spec.group->order();
  out.mode = spec.mode;
  out.enumerated = total;
  out.target_degree = spec.target_degree;
  for (auto& part : parts)
    for (auto& r : part) {
      ++out.degree_counts[r.degree];
      if (r.connected) {
        ++out.connected_degree_counts[r.degree];
        if (spec.mode == SearchMode::Sets && r.distance_degree != r.degree) out.counterexamples.push_back(r.index);
      }
      if (!r.h_star_matches || !r.h_prime_matches || !r.shadow_contains) ++out.lemma_failures;
      if (spec.target_degree && r.degree == *spec.target_degree) {
        out.target_found = true;
        if (r.connected) out.target_found_connected = true;
      }
      out.records.push_back(std::move(r));
    }
  return out;
}

struct DegreeAgreement {
  bool holds = true;
  std::size_t checked = 0;
  std::vector<SearchRecord> counterexamples;
};

/// Deg = Deg_D over every connected enumerated normal Cayley graph.
inline DegreeAgreement verify_deg_equals_distdeg(SearchSpec spec) {
  spec.require_connected = true;
  spec.mode = SearchMode::Sets;
  const SearchResult r = classify(spec);
  DegreeAgreement out;
  for (const auto& rec : r.records) {
    ++out.checked;
    if (rec.distance_degree != rec.degree) out.counterexamples.push_back(rec);
  }
  out.holds = out.counterexamples.empty();
  return out;
}

}  // namespace cayley

#endif  // CAYLEY_SEARCH_HPP
