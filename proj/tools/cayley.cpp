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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayley/cayley.hpp"

namespace {

std::vector<long long> parse_unit_list(const std::string& text) {
  std::vector<long long> out;
  for (auto part : cayley::detail::split_top(text, ',')) {
    if (part.empty()) continue;
    std::string s(part);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw cayley::Error(cayley::ErrorKind::InvalidArgument, "bad unit '" + s + "' in --subgroup");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra, splitting fields and algebraic degrees of Cayley colour graphs"};
  app.require_subcommand(1);
  std::string out_path;
  std::size_t limit = 64;
  app.add_option("--out", out_path, "Write the report to a file instead of standard output");
  app.add_option("--limit", limit, "Group order cap for search")->check(CLI::PositiveNumber);

  std::string file;
  auto* spectrum = app.add_subcommand("spectrum", "Exact and numeric adjacency spectrum");
  spectrum->add_option("file", file, "Instance file")->required();
  auto* degree = app.add_subcommand("degree", "H_f, splitting field and algebraic degree");
  degree->add_option("file", file, "Instance file")->required();
  auto* distance = app.add_subcommand("distance", "Distance layers, H' and distance degree");
  distance->add_option("file", file, "Instance file")->required();
  auto* check = app.add_subcommand("check", "Algebraic integrality over the fixed field of a unit subgroup");
  check->add_option("file", file, "Instance file")->required();
  std::string subgroup;
  check->add_option("--subgroup", subgroup, "Comma-separated generators of H_K (empty for the trivial subgroup)")
      ->required()
      ->expected(0, 1);

  auto* search = app.add_subcommand("search", "Classify all normal connection sets of a group");
  std::string group;
  std::size_t multisets = 0, target = 0;
  bool connected = false;
  unsigned jobs = 1;
  search->add_option("--group", group, "Group descriptor, e.g. dihedral:4 or product:cyclic:2,cyclic:4")->required();
  search->add_option("--multisets", multisets, "Enumerate multisets with this multiplicity cap");
  search->add_flag("--connected", connected, "Report connected Cayley graphs only");
  search->add_option("--degree", target, "Exit 1 unless a graph of this algebraic degree exists")
      ->check(CLI::PositiveNumber);
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--limit", limit, "Group order cap")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cayley::kExitOk : cayley::kExitInput;
  }

  cayley::Report report;
  try {
    if (*search) {
      cayley::SearchSpec spec;
      spec.group = cayley::group_from_descriptor(group);
      if (multisets > 0) {
        spec.mode = cayley::SearchMode::Multisets;
        spec.multiplicity_cap = multisets;
      }
      spec.require_connected = connected;
      if (target > 0) spec.target_degree = target;
      spec.jobs = jobs;
      spec.order_limit = limit;
      report = cayley::cmd_search(spec);
    } else {
      const cayley::InstanceDocument doc = cayley::load_instance(file);
      if (*spectrum)
        report = cayley::cmd_spectrum(doc);
      else if (*degree)
        report = cayley::cmd_degree(doc);
      else if (*distance)
        report = cayley::cmd_distance(doc);
      else
        report = cayley::cmd_check(doc, parse_unit_list(subgroup));
    }
  } catch (const cayley::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cayley::exit_code_for(e.kind());
  }

  if (out_path.empty()) {
    std::cout << report.text();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return cayley::kExitInput;
    }
    out << report.text();
  }
  return report.exit_code;
}
