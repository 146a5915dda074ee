// Copyright 2026 The Amenable Entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amenable/spec_file.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "amenable/errors.hpp"
#include "json.hpp"

namespace amenable {
namespace {

using Json = nlohmann::ordered_json;

const Json& require(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object() || !object.contains(key)) {
    throw UsageError(where + ": missing key '" + key + "'");
  }
  return object.at(key);
}

Group parse_group(const Json& j) {
  const std::string kind = require(j, "kind", "group").get<std::string>();
  if (kind == "lattice") {
    const auto d = j.contains("d") ? j.at("d").get<std::int64_t>() : 1;
    if (d < 1 || d > static_cast<std::int64_t>(kMaxCoordinates)) {
      throw UsageError("group: d must lie in [1, " + std::to_string(kMaxCoordinates) + "]");
    }
    return Group::integer_lattice(static_cast<std::size_t>(d));
  }
  if (kind == "heisenberg") return Group::heisenberg();
  throw UsageError("group: unknown kind '" + kind + "'");
}

GroupElement parse_element(const Group& group, const Json& j, const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected a coordinate vector");
  std::vector<std::int64_t> coords;
  for (const Json& c : j) coords.push_back(c.get<std::int64_t>());
  return group.element(coords);
}

FiniteSubset parse_set(const Group& group, const Json& j, const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected a list of coordinate vectors");
  std::vector<GroupElement> elements;
  for (const Json& e : j) elements.push_back(parse_element(group, e, where));
  return FiniteSubset(group, std::move(elements));
}

std::vector<std::vector<FiniteSubset>> parse_rows(const Group& group, const Json& j,
                                                  const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected rows of sets");
  std::vector<std::vector<FiniteSubset>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) throw UsageError(where + ": expected a row of sets");
    std::vector<FiniteSubset> sets;
    for (const Json& s : row) sets.push_back(parse_set(group, s, where));
    rows.push_back(std::move(sets));
  }
  return rows;
}

Rational parse_number(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number()) return parse_rational(j.dump());
  throw UsageError(where + ": expected a number");
}

std::string symbol_name(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw UsageError("forbidden: symbol must be a string");
}

Subshift parse_subshift(const Group& group, const Json& root) {
  std::vector<std::string> alphabet;
  for (const Json& s : root.at("alphabet")) alphabet.push_back(symbol_name(s));
  std::vector<Pattern> forbidden;
  if (root.contains("forbidden")) {
    // Validate symbol names against the alphabet before constructing.
    const Subshift bare(group, alphabet, {});
    for (const Json& p : root.at("forbidden")) {
      std::vector<std::pair<GroupElement, Symbol>> cells;
      for (const Json& cell : require(p, "cells", "forbidden")) {
        const std::string name = symbol_name(require(cell, "symbol", "forbidden"));
        const auto symbol = bare.symbol_index(name);
        if (!symbol) throw UsageError("forbidden: unknown symbol '" + name + "'");
        cells.emplace_back(parse_element(group, require(cell, "offset", "forbidden"), "forbidden"),
                           *symbol);
      }
      forbidden.push_back(Pattern::from_cells(group, std::move(cells)));
    }
  }
  return Subshift(group, std::move(alphabet), std::move(forbidden));
}

FoelnerSequence parse_foelner(const Group& group, const Json& j) {
  if (j.contains("explicit")) {
    std::vector<FiniteSubset> sets;
    for (const Json& s : j.at("explicit")) sets.push_back(parse_set(group, s, "foelner"));
    return FoelnerSequence::explicit_sets(group, std::move(sets));
  }
  const std::string kind = require(j, "kind", "foelner").get<std::string>();
  if (kind == "heisenberg-boxes") {
    if (group.kind() != GroupKind::kHeisenberg) throw UsageError("foelner: group is not H3(Z)");
    return FoelnerSequence::heisenberg_boxes();
  }
  if (group.kind() != GroupKind::kIntegerLattice) {
    throw UsageError("foelner: '" + kind + "' needs a lattice group");
  }
  if (kind == "boxes") return FoelnerSequence::lattice_boxes(group.rank());
  if (kind == "centered") return FoelnerSequence::lattice_centered_boxes(group.rank());
  throw UsageError("foelner: unknown kind '" + kind + "'");
}

CoveringInstance parse_covering(const Group& group, const Json& j) {
  return CoveringInstance(group, parse_rows(group, require(j, "F", "covering"), "covering.F"),
                          parse_rows(group, require(j, "A", "covering"), "covering.A"),
                          parse_set(group, require(j, "ambient", "covering"), "covering.ambient"),
                          parse_number(require(j, "delta", "covering"), "covering.delta"),
                          parse_set(group, require(j, "D", "covering"), "covering.D"),
                          parse_number(require(j, "C", "covering"), "covering.C"));
}

Json element_json(const GroupElement& g) {
  Json out = Json::array();
  for (std::int64_t c : g.coordinates()) out.push_back(c);
  return out;
}

Json set_json(const FiniteSubset& s) {
  Json out = Json::array();
  for (const GroupElement& g : s) out.push_back(element_json(g));
  return out;
}

Json rows_json(const std::vector<std::vector<FiniteSubset>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const FiniteSubset& s : row) r.push_back(set_json(s));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SpecFile parse_spec(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed spec file: ") + e.what());
  }
  try {
    SpecFile spec;
    spec.group = parse_group(require(root, "group", "spec"));
    if (root.contains("alphabet")) spec.subshift = parse_subshift(*spec.group, root);
    if (root.contains("foelner")) spec.foelner = parse_foelner(*spec.group, root.at("foelner"));
    if (root.contains("covering")) {
      spec.covering = parse_covering(*spec.group, root.at("covering"));
    }
    return spec;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("invalid spec file: ") + e.what());
  }
}

SpecFile load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open spec file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

std::string to_spec_json(const SpecFile& spec) {
  if (!spec.group) throw UsageError("spec has no group");
  Json root;
  Json group;
  if (spec.group->kind() == GroupKind::kHeisenberg) {
    group["kind"] = "heisenberg";
  } else {
    group["kind"] = "lattice";
    group["d"] = spec.group->rank();
  }
  root["group"] = std::move(group);
  if (spec.subshift) {
    root["alphabet"] = spec.subshift->alphabet();
    Json forbidden = Json::array();
    for (const Pattern& p : spec.subshift->forbidden()) {
      Json cells = Json::array();
      for (std::size_t i = 0; i < p.size(); ++i) {
        Json cell;
        cell["offset"] = element_json(p.domain()[i]);
        cell["symbol"] = spec.subshift->alphabet()[p.symbols()[i]];
        cells.push_back(std::move(cell));
      }
      Json entry;
      entry["cells"] = std::move(cells);
      forbidden.push_back(std::move(entry));
    }
    root["forbidden"] = std::move(forbidden);
  }
  if (spec.foelner) {
    Json f;
    switch (spec.foelner->kind()) {
      case FoelnerKind::kLatticeBoxes:
        f["kind"] = "boxes";
        break;
      case FoelnerKind::kLatticeCenteredBoxes:
        f["kind"] = "centered";
        break;
      case FoelnerKind::kHeisenbergBoxes:
        f["kind"] = "heisenberg-boxes";
        break;
      case FoelnerKind::kExplicit: {
        Json sets = Json::array();
        for (std::size_t n = 1; n <= *spec.foelner->length(); ++n) {
          sets.push_back(set_json(spec.foelner->set(n)));
        }
        f["explicit"] = std::move(sets);
        break;
      }
    }
    root["foelner"] = std::move(f);
  }
  if (spec.covering) {
    const CoveringInstance& c = *spec.covering;
    Json cov;
    cov["F"] = rows_json(c.shapes());
    cov["A"] = rows_json(c.bases());
    cov["ambient"] = set_json(c.ambient());
    cov["delta"] = to_string(c.delta());
    cov["D"] = set_json(c.window());
    cov["C"] = to_string(c.temper_bound());
    root["covering"] = std::move(cov);
  }
  return root.dump();
}

}  // namespace amenable
