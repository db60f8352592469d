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

// Instance documents: a sectioned plain-text format describing a group plus
// either a colour function or a connection multiset.
//
//   [group]
//   kind = dihedral          # cyclic | dihedral | product | generated
//   m = 8                    # n for cyclic, m for dihedral,
//                            # factors = cyclic:2, cyclic:3 for product,
//                            # generators = (0 1 2 3); (0 2) for generated
//   [colour]
//   a = 1                    # one element
//   class("b") = 4           # a whole conjugacy class
//
//   [connection]
//   a^2 = 2                  # multiplicity
//   b                        # multiplicity one; lists "x, y, z" also work
//
//   [options]
//   distance = true

#ifndef CAYLEY_INSTANCE_HPP
#define CAYLEY_INSTANCE_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "colour.hpp"
#include "exactnum.hpp"
#include "groups.hpp"

namespace cayley {

namespace detail {

inline std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on `sep` outside parentheses.
inline std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim_view(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim_view(s.substr(start)));
  return out;
}

inline std::optional<std::size_t> parse_size(std::string_view s) {
  s = trim_view(s);
  if (s.empty() || s.size() > 12) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

inline Permutation parse_cycles(std::string_view text) {
  text = trim_view(text);
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t degree = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw Error(ErrorKind::InvalidArgument, "expected '(' in cycle notation: " + std::string(text));
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "unterminated cycle");
    std::vector<std::uint32_t> cyc;
    std::istringstream in{std::string(text.substr(i + 1, close - i - 1))};
    std::string tok;
    while (in >> tok) {
      auto v = parse_size(tok);
      if (!v) throw Error(ErrorKind::InvalidArgument, "bad point '" + tok + "' in cycle");
      cyc.push_back(static_cast<std::uint32_t>(*v));
      degree = std::max(degree, *v + 1);
    }
    cycles.push_back(std::move(cyc));
    i = close + 1;
  }
  Permutation p(degree);
  for (std::size_t k = 0; k < degree; ++k) p[k] = static_cast<std::uint32_t>(k);
  std::vector<bool> moved(degree, false);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (moved[c[k]]) throw Error(ErrorKind::InvalidArgument, "cycles are not disjoint");
      moved[c[k]] = true;
      p[c[k]] = c[(k + 1) % c.size()];
    }
  return p;
}

}  // namespace detail

/// Builds a group from a "kind:params" descriptor: cyclic:N, dihedral:M,
/// product:<g1>,<g2>[,...] (left-associated; parenthesise nested products),
/// generated:(0 1 2);(0 1).
inline GroupPtr group_from_descriptor(std::string_view text) {
  text = detail::trim_view(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') return group_from_descriptor(text.substr(1, text.size() - 2));
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorKind::InvalidArgument, "group descriptor needs kind:params");
  const auto kind = detail::trim_view(text.substr(0, colon));
  const auto rest = detail::trim_view(text.substr(colon + 1));
  if (kind == "cyclic" || kind == "dihedral") {
    auto v = detail::parse_size(rest);
    if (!v || *v == 0) throw Error(ErrorKind::InvalidArgument, "expected a positive integer after " + std::string(kind));
    return kind == "cyclic" ? make_cyclic(*v) : make_dihedral(*v);
  }
  if (kind == "product") {
    auto parts = detail::split_top(rest, ',');
    if (parts.size() < 2) throw Error(ErrorKind::InvalidArgument, "product needs at least two factors");
    GroupPtr g = group_from_descriptor(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = make_product(g, group_from_descriptor(parts[i]));
    return g;
  }
  if (kind == "generated") {
    std::vector<Permutation> gens;
    for (auto part : detail::split_top(rest, ';'))
      if (!part.empty()) gens.push_back(detail::parse_cycles(part));
    return make_from_generators(std::move(gens));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown group kind '" + std::string(kind) + "'");
}

struct InstanceDocument {
  std::string group_kind;                         // cyclic | dihedral | product | generated
  std::string group_parameter;                    // the text after "kind:"
  GroupPtr group;
  std::optional<std::vector<Rational>> colour;    // one value per element
  std::optional<std::vector<std::size_t>> connection;
  bool distance = false;

  std::string group_descriptor() const { return group_kind + ":" + group_parameter; }

  ColourFunction colour_function() const {
    if (colour) return ColourFunction(group, *colour);
    if (connection) return colour_from_multiset(connection_multiset());
    throw Error(ErrorKind::InvalidArgument, "instance has neither [colour] nor [connection]");
  }

  ConnectionMultiset connection_multiset() const {
    if (!connection) throw Error(ErrorKind::InvalidArgument, "instance has no [connection] section");
    return ConnectionMultiset(group, *connection);
  }
};

namespace detail {

inline std::size_t column_of(std::string_view line, std::string_view part) {
  return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

}  // namespace detail

/// Parses an instance document; errors carry 1-based line and column.
inline InstanceDocument parse_instance(std::string_view text) {
  InstanceDocument doc;
  enum class Section { None, Group, Colour, Connection, Options } section = Section::None;
  std::optional<std::size_t> group_line;
  std::vector<std::pair<std::string, std::pair<std::string, std::size_t>>> group_keys;  // key -> (value, line)
  std::vector<bool> colour_set;

  auto finish_group = [&](std::size_t line) {
    if (doc.group) return;
    if (!group_line) throw ParseError(line, 1, "[group] section must come first");
    std::string kind, param;
    std::size_t param_line = *group_line;
    for (auto& [k, v] : group_keys) {
      if (k == "kind")
        kind = v.first;
      else {
        param = v.first;
        param_line = v.second;
      }
    }
    const std::string want = kind == "cyclic" ? "n" : kind == "dihedral" ? "m" : kind == "product" ? "factors" : "generators";
    if (kind != "cyclic" && kind != "dihedral" && kind != "product" && kind != "generated")
      throw ParseError(*group_line, 1, "group kind must be cyclic, dihedral, product or generated");
    bool have = false;
    for (auto& [k, v] : group_keys) {
      if (k == "kind") continue;
      if (k != want) throw ParseError(v.second, 1, "unexpected key '" + k + "' for " + kind + " group");
      have = true;
    }
    if (!have && kind != "generated") throw ParseError(*group_line, 1, "missing key '" + want + "'");
    if (kind == "product") {
      std::string joined;
      for (auto part : detail::split_top(param, ',')) joined += (joined.empty() ? "" : ",") + std::string(part);
      param = joined;
    }
    try {
      doc.group = group_from_descriptor(kind + ":" + param);
    } catch (const Error& e) {
      throw ParseError(param_line, 1, e.what());
    }
    doc.group_kind = kind;
    doc.group_parameter = param;
    if (kind == "generated") {
      std::string canon;
      for (auto part : detail::split_top(param, ';'))
        if (!part.empty()) canon += (canon.empty() ? "" : "; ") + detail::cycle_notation(detail::parse_cycles(part));
      doc.group_parameter = canon;
    }
  };

  auto resolve = [&](std::string_view line, std::string_view name, std::size_t line_no) -> std::vector<Element> {
    std::string_view n = detail::trim_view(name);
    if (n.substr(0, 6) == "class(" && n.back() == ')') {
      auto inner = detail::trim_view(n.substr(6, n.size() - 7));
      if (inner.size() < 2 || inner.front() != '"' || inner.back() != '"')
        throw ParseError(line_no, detail::column_of(line, inner), "class(...) expects a quoted element name");
      auto el = doc.group->find(inner.substr(1, inner.size() - 2));
      if (!el) throw ParseError(line_no, detail::column_of(line, inner), "unknown element " + std::string(inner));
      const auto& cc = doc.group->classes();
      return cc.classes[cc.class_of[*el]];
    }
    auto el = doc.group->find(n);
    if (!el) throw ParseError(line_no, detail::column_of(line, n), "unknown element '" + std::string(n) + "'");
    return {*el};
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim_view(line);
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, detail::column_of(raw, line), "unterminated section header");
      const auto name = detail::trim_view(line.substr(1, line.size() - 2));
      if (name == "group") {
        if (group_line) throw ParseError(line_no, 1, "duplicate [group] section");
        group_line = line_no;
        section = Section::Group;
        continue;
      }
      finish_group(line_no);
      if (name == "colour") {
        if (doc.colour || doc.connection) throw ParseError(line_no, 1, "only one of [colour] or [connection] is allowed");
        doc.colour = std::vector<Rational>(doc.group->order(), Rational(0));
        colour_set.assign(doc.group->order(), false);
        section = Section::Colour;
      } else if (name == "connection") {
        if (doc.colour || doc.connection) throw ParseError(line_no, 1, "only one of [colour] or [connection] is allowed");
        doc.connection = std::vector<std::size_t>(doc.group->order(), 0);
        section = Section::Connection;
      } else if (name == "options") {
        section = Section::Options;
      } else {
        throw ParseError(line_no, detail::column_of(raw, name), "unknown section [" + std::string(name) + "]");
      }
      continue;
    }

    auto eq = line.find('=');
    const std::string_view key = detail::trim_view(line.substr(0, eq == std::string_view::npos ? line.size() : eq));
    const std::string_view value = eq == std::string_view::npos ? std::string_view{} : detail::trim_view(line.substr(eq + 1));
    switch (section) {
      case Section::None:
        throw ParseError(line_no, 1, "entry outside of any section");
      case Section::Group: {
        if (eq == std::string_view::npos) throw ParseError(line_no, detail::column_of(raw, line), "expected key = value");
        for (auto& gk : group_keys)
          if (gk.first == key) throw ParseError(line_no, detail::column_of(raw, key), "duplicate key '" + std::string(key) + "'");
        if (key != "kind" && key != "n" && key != "m" && key != "factors" && key != "generators")
          throw ParseError(line_no, detail::column_of(raw, key), "unknown key '" + std::string(key) + "'");
        group_keys.push_back({std::string(key), {std::string(value), line_no}});
        break;
      }
      case Section::Colour: {
        if (eq == std::string_view::npos) throw ParseError(line_no, detail::column_of(raw, line), "expected element = value");
        Rational q;
        if (!parse_rational(value, q))
          throw ParseError(line_no, detail::column_of(raw, value), "malformed rational '" + std::string(value) + "'");
        for (Element x : resolve(raw, key, line_no)) {
          if (colour_set[x] && (*doc.colour)[x] != q)
            throw ParseError(line_no, detail::column_of(raw, key), "conflicting value for " + doc.group->name(x));
          (*doc.colour)[x] = q;
          colour_set[x] = true;
        }
        break;
      }
      case Section::Connection: {
        if (eq == std::string_view::npos) {
          for (auto part : detail::split_top(line, ','))
            for (Element x : resolve(raw, part, line_no)) ++(*doc.connection)[x];
          break;
        }
        auto k = detail::parse_size(value);
        if (!k) throw ParseError(line_no, detail::column_of(raw, value), "multiplicity must be a nonnegative integer");
        for (Element x : resolve(raw, key, line_no)) (*doc.connection)[x] += *k;
        break;
      }
      case Section::Options: {
        if (key != "distance") throw ParseError(line_no, detail::column_of(raw, key), "unknown option '" + std::string(key) + "'");
        if (value == "true")
          doc.distance = true;
        else if (value == "false")
          doc.distance = false;
        else
          throw ParseError(line_no, detail::column_of(raw, value), "distance must be true or false");
        break;
      }
    }
    if (eol == text.size()) break;
  }
  finish_group(line_no == 0 ? 1 : line_no);
  return doc;
}

inline InstanceDocument load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

/// Canonical form: element-level entries in index order, zeros omitted.
inline std::string serialize_instance(const InstanceDocument& doc) {
  std::ostringstream out;
  out << "[group]\nkind = " << doc.group_kind << "\n";
  const std::string key = doc.group_kind == "cyclic"     ? "n"
                          : doc.group_kind == "dihedral" ? "m"
                          : doc.group_kind == "product"  ? "factors"
                                                         : "generators";
  std::string param = doc.group_parameter;
  if (doc.group_kind == "product") {
    std::string spaced;
    for (auto part : detail::split_top(param, ',')) spaced += (spaced.empty() ? "" : ", ") + std::string(part);
    param = spaced;
  }
  out << key << " = " << param << "\n";
  if (doc.colour) {
    out << "\n[colour]\n";
    for (Element x = 0; x < doc.colour->size(); ++x)
      if ((*doc.colour)[x] != 0) out << doc.group->name(x) << " = " << (*doc.colour)[x].str() << "\n";
  }
  if (doc.connection) {
    out << "\n[connection]\n";
    for (Element x = 0; x < doc.connection->size(); ++x)
      if ((*doc.connection)[x] != 0) out << doc.group->name(x) << " = " << (*doc.connection)[x] << "\n";
  }
  if (doc.distance) out << "\n[options]\ndistance = true\n";
  return out.str();
}

}  // namespace cayley

#endif  // CAYLEY_INSTANCE_HPP
