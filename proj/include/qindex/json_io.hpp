// Copyright 2026 The qindex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "qindex/digraph.hpp"

namespace qindex {

using json = nlohmann::json;

/// %.17g; enough digits for any double to round-trip.
std::string format_double(double value);

/// Compact single-line JSON with sorted keys and every float at 17
/// significant digits. nlohmann's own dump uses shortest round-trip
/// formatting, which is not what golden files want.
std::string dump_json(const json& value);

/// Schema: {"n": int, "arcs": [[i,j],...], "bipartition": {"left":[..],"right":[..]}}.
/// The bipartition key is omitted when `sides` is empty.
json digraph_to_json(const Digraph& g, const std::optional<Bipartition>& sides = std::nullopt);

/// Throws InvalidInput on schema errors or malformed partitions.
std::pair<Digraph, std::optional<Bipartition>> digraph_from_json(const json& doc);

/// `digraph { 1 -> 2; ... }`, one arc per line, sorted.
std::string digraph_to_dot(const Digraph& g, const std::optional<Bipartition>& sides = std::nullopt);

}  // namespace qindex
