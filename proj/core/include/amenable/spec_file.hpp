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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "amenable/covering.hpp"
#include "amenable/foelner.hpp"
#include "amenable/group.hpp"
#include "amenable/subshift.hpp"

namespace amenable {

/// Contents of a JSON spec file. Top-level keys, all optional except group:
///
///   group      {"kind": "lattice", "d": 2} or {"kind": "heisenberg"}
///   alphabet   ["0", "1"]
///   forbidden  [{"cells": [{"offset": [0, 0], "symbol": "1"}, ...]}, ...]
///   foelner    {"kind": "boxes" | "centered" | "heisenberg-boxes"}
///              or {"explicit": [[[0], [1]], [[0], [1], [2]], ...]}
///   covering   {"F": rows of shapes, "A": rows of base sets, "ambient": set,
///               "delta": "1/200", "D": set, "C": "4"}
///
/// A set is a list of coordinate vectors. Rationals are strings ("p/q" or
/// decimal) or JSON numbers.
struct SpecFile {
  std::optional<Group> group;
  std::optional<Subshift> subshift;  // present when "alphabet" is given
  std::optional<FoelnerSequence> foelner;
  std::optional<CoveringInstance> covering;
};

/// Throws UsageError for malformed input.
SpecFile parse_spec(std::string_view text);
SpecFile load_spec(const std::filesystem::path& path);

/// Serializes in the schema above with a fixed key order; parse_spec of the
/// result reproduces the input.
std::string to_spec_json(const SpecFile& spec);

}  // namespace amenable
