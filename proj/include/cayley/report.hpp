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

#ifndef CAYLEY_REPORT_HPP
#define CAYLEY_REPORT_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "instance.hpp"
#include "search.hpp"
#include "spectra.hpp"

namespace cayley {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitInput = 2, kExitInternal = 3 };

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InternalInconsistency:
    case ErrorKind::NoConvergence: return kExitInternal;
    default: return kExitInput;
  }
}

/// Human-readable lines plus a line-oriented `key = value` block delimited
/// by `--- report ---` / `--- end ---`.
struct Report {
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> warnings;
  int exit_code = kExitOk;

  void say(std::string line) { lines.push_back(std::move(line)); }
  void set(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }

  std::string machine_block() const {
    std::string out = "--- report ---\n";
    for (const auto& [k, v] : fields) out += k + " = " + v + "\n";
    out += "--- end ---\n";
    return out;
  }

  std::string text() const {
    std::string out;
    for (const auto& w : warnings) out += "warning: " + w + "\n";
    for (const auto& l : lines) out += l + "\n";
    return out + machine_block();
  }
};

/// Ten significant digits, no negative zero.
inline std::string format_decimal(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string join_units(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

inline std::string element_list(const Group& g, std::span<const Element> xs) {
  std::string out;
  for (Element x : xs) out += (out.empty() ? "" : "; ") + g.name(x);
  return out;
}

inline std::string multiset_string(const Group& g, const std::vector<std::size_t>& m) {
  std::string out;
  for (Element x = 0; x < m.size(); ++x)
    for (std::size_t k = 0; k < m[x]; ++k) out += (out.empty() ? "" : "; ") + g.name(x);
  return "{" + out + "}";
}

namespace detail {

inline void describe_instance(Report& r, const InstanceDocument& doc, const char* command) {
  r.set("command", command);
  r.set("group", doc.group_descriptor());
  r.set("order", std::to_string(doc.group->order()));
  r.set("instance", doc.colour ? "colour" : "connection");
  r.say("group " + doc.group_descriptor() + " of order " + std::to_string(doc.group->order()));
  if (doc.connection) r.say("connection " + multiset_string(*doc.group, *doc.connection));
}

inline void describe_spectrum(Report& r, const Spectrum& s, const std::string& prefix, const std::string& title) {
  r.say(title);
  r.set(prefix + ".count", std::to_string(s.entries.size()));
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    const std::string dec = format_decimal(e.value.to_complex().real());
    char line[64];
    std::snprintf(line, sizeof line, "  %16s  x%-4zu  ", dec.c_str(), e.multiplicity);
    r.say(line + e.value.to_string());
    const std::string key = prefix + "." + std::to_string(i);
    r.set(key + ".value", e.value.to_string());
    r.set(key + ".decimal", dec);
    r.set(key + ".multiplicity", std::to_string(e.multiplicity));
  }
}

inline void describe_field(Report& r, const FieldReport& f, const std::string& prefix, const std::string& label) {
  r.set(prefix + ".members", join_units(f.fixing.members));
  r.set(prefix + ".generators", join_units(f.fixing.generators));
  r.set(prefix + ".size", std::to_string(f.fixing.size()));
  r.say(label + " = {" + join_units(f.fixing.members) + "} <= Z_" + std::to_string(f.modulus) + "^*  (generators " +
        join_units(f.fixing.generators) + ")");
  if (f.primitive_element) {
    r.set(prefix + ".primitive_element", f.primitive_element->to_string());
    r.set(prefix + ".minimal_polynomial", poly_to_string(f.minimal_polynomial));
    r.say("field generated by " + f.primitive_element->to_string() + " with minimal polynomial " +
          poly_to_string(f.minimal_polynomial));
  } else {
    r.set(prefix + ".primitive_element", "none");
  }
}

}  // namespace detail

inline Report cmd_spectrum(const InstanceDocument& doc, double tol = 1e-8) {
  Report r;
  detail::describe_instance(r, doc, "spectrum");
  const ColourFunction f = doc.colour_function();
  std::optional<Spectrum> exact;
  if (has_character_table(*doc.group)) {
    exact = spectrum_exact(f, character_table(doc.group));
    detail::describe_spectrum(r, *exact, "spectrum", "exact spectrum (value, multiplicity, power-basis form):");
  } else {
    r.warnings.push_back("UnsupportedFamily: no character table for " + doc.group->descriptor() + "; numeric spectrum only");
  }
  r.set("spectrum.exact", yes_no(exact.has_value()));
  const NumericSpectrum numeric = spectrum_numeric(f);
  std::string nums;
  for (double v : numeric.values) nums += (nums.empty() ? "" : ",") + format_decimal(v);
  r.set("numeric.values", nums);
  r.say("numeric eigenvalues: " + nums);
  if (exact) {
    const auto cmp = compare_spectra(*exact, numeric, tol);
    r.set("comparison.match", yes_no(cmp.match));
    r.say("exact vs numeric: " + std::string(cmp.match ? "match" : "MISMATCH") + " (" + cmp.message + ")");
    if (!cmp.match) r.exit_code = kExitInternal;
  }
  const FieldReport field = splitting_field(f);
  detail::describe_field(r, field, "h", "H_f");
  r.set("degree", std::to_string(field.degree));
  const auto verdict = integrality_verdict(f, exact ? &*exact : nullptr);
  r.set("verdict.rational", yes_no(verdict.rational));
  r.set("verdict.integral", yes_no(verdict.integral));
  r.say("degree " + std::to_string(field.degree) + "; rational: " + yes_no(verdict.rational) +
        "; integral: " + yes_no(verdict.integral));
  return r;
}

inline Report cmd_degree(const InstanceDocument& doc) {
  Report r;
  detail::describe_instance(r, doc, "degree");
  const ColourFunction f = doc.colour_function();
  const FieldReport field = splitting_field(f);
  detail::describe_field(r, field, "h", "H_f");
  if (doc.connection) {
    const UnitSubgroup h_star = multiset_H_star(doc.connection_multiset());
    r.set("h_star.members", join_units(h_star.members));
  }
  r.set("degree", std::to_string(field.degree));
  r.say("Deg = phi(" + std::to_string(field.modulus) + ")/|H_f| = " + std::to_string(euler_phi(field.modulus)) + "/" +
        std::to_string(field.fixing.size()) + " = " + std::to_string(field.degree));
  const bool rational = field.degree == 1;
  r.set("verdict.rational", yes_no(rational));
  return r;
}

inline Report cmd_distance(const InstanceDocument& doc) {
  Report r;
  detail::describe_instance(r, doc, "distance");
  const ConnectionMultiset s = doc.connection_multiset();
  const DistanceReport d = distance_report(s);
  const Group& g = *doc.group;
  r.set("diameter", std::to_string(d.distance.diameter));
  r.say("diameter " + std::to_string(d.distance.diameter));
  for (std::size_t i = 0; i < d.distance.layers.size(); ++i) {
    r.set("layer." + std::to_string(i), element_list(g, d.distance.layers[i]));
    r.say("  S_" + std::to_string(i) + " = {" + element_list(g, d.distance.layers[i]) + "}");
  }
  std::string dist;
  for (Element x = 0; x < g.order(); ++x) dist += (x ? "," : "") + d.distance.distance(x).str();
  r.set("distance.values", dist);
  detail::describe_field(r, d.field, "h_prime", "H'");
  r.set("distance_degree", std::to_string(d.field.degree));
  const std::size_t deg = algebraic_degree(colour_from_multiset(s));
  r.set("degree", std::to_string(deg));
  r.say("Deg_D = " + std::to_string(d.field.degree) + ", Deg = " + std::to_string(deg));
  if (d.spectrum) detail::describe_spectrum(r, *d.spectrum, "distance_spectrum", "exact distance spectrum:");
  r.set("distance_spectrum.exact", yes_no(d.spectrum.has_value()));
  return r;
}

inline Report cmd_check(const InstanceDocument& doc, const std::vector<long long>& subgroup_generators) {
  Report r;
  detail::describe_instance(r, doc, "check");
  const ColourFunction f = doc.colour_function();
  const UnitSubgroup h_k = close_units(doc.group->order(), subgroup_generators);
  const bool integral = is_algebraically_integral_over(f, h_k);
  const std::size_t field_degree = euler_phi(doc.group->order()) / h_k.size();
  r.set("subgroup.members", join_units(h_k.members));
  r.set("subgroup.generators", join_units(h_k.generators));
  r.set("field_degree", std::to_string(field_degree));
  r.set("integral_over_field", yes_no(integral));
  r.say("H_K = {" + join_units(h_k.members) + "}, [K:Q] = " + std::to_string(field_degree));
  r.say(std::string("algebraically integral over K: ") + yes_no(integral));
  return r;
}

inline Report cmd_search(const SearchSpec& spec) {
  Report r;
  const SearchResult res = classify(spec);
  const Group& g = *spec.group;
  r.set("command", "search");
  r.set("group", res.group);
  r.set("order", std::to_string(res.order));
  r.set("mode", res.mode == SearchMode::Sets ? "sets" : "multisets(cap " + std::to_string(spec.multiplicity_cap) + ")");
  r.set("connected_only", yes_no(spec.require_connected));
  r.set("enumerated", std::to_string(res.enumerated));
  r.set("records", std::to_string(res.records.size()));
  r.say("group " + res.group + ": " + std::to_string(res.enumerated) + " normal connection sets, " +
        std::to_string(res.records.size()) + " reported");
  const bool table = res.records.size() <= 200;
  if (table) r.say("  index  valency  connected  Deg  Deg_D  set");
  for (const auto& rec : res.records) {
    const std::string key = "record." + std::to_string(rec.index);
    const std::string dd = rec.distance_degree ? std::to_string(*rec.distance_degree) : "-";
    r.set(key + ".set", multiset_string(g, rec.multiplicity));
    r.set(key + ".valency", std::to_string(rec.valency));
    r.set(key + ".connected", yes_no(rec.connected));
    r.set(key + ".degree", std::to_string(rec.degree));
    r.set(key + ".distance_degree", dd);
    if (table) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "  %5zu  %7zu  %9s  %3zu  %5s  ", rec.index, rec.valency, yes_no(rec.connected).c_str(),
                    rec.degree, dd.c_str());
      r.say(buf + multiset_string(g, rec.multiplicity));
    }
  }
  for (const auto& [d, c] : res.degree_counts) r.set("degree_count." + std::to_string(d), std::to_string(c));
  for (const auto& [d, c] : res.connected_degree_counts)
    r.set("connected_degree_count." + std::to_string(d), std::to_string(c));
  r.set("counterexamples", std::to_string(res.counterexamples.size()));
  r.set("lemma_failures", std::to_string(res.lemma_failures));
  std::string summary = "degrees:";
  for (const auto& [d, c] : res.degree_counts) summary += " " + std::to_string(d) + " x" + std::to_string(c);
  r.say(summary);
  r.say("Deg != Deg_D counterexamples: " + std::to_string(res.counterexamples.size()));
  if (res.lemma_failures != 0) r.exit_code = kExitInternal;
  if (spec.target_degree) {
    const std::string d = std::to_string(*spec.target_degree);
    r.set("target_degree", d);
    r.set("target_found", yes_no(res.target_found));
    r.set("target_found_connected", yes_no(res.target_found_connected));
    if (res.target_found) {
      r.say("found " + d + "-integral normal Cayley graphs");
    } else {
      r.say("no " + d + "-integral normal Cayley graph on " + res.group);
      if (r.exit_code == kExitOk) r.exit_code = kExitNegative;
    }
  }
  return r;
}

}  // namespace cayley

#endif  // CAYLEY_REPORT_HPP
