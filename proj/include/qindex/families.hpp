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
#include <string_view>

#include "qindex/digraph.hpp"

namespace qindex {

enum class Family { kpq, b1, b2, b3, b4, b5, b6, path, cycle };

/// CLI-facing names: kpq, b1..b6, path, cycle.
std::string_view family_name(Family f);
Family parse_family(std::string_view name);  // throws InvalidInput

/// Family member parameters. For path and cycle only n matters.
struct FamilySpec {
  Family variant = Family::kpq;
  int n = 0;
  int p = 0;
  int q = 0;
};

/// Throws InvalidInput with an actionable message when the parameters do
/// not describe a member: p >= q >= 1; kpq needs n = p+q; B-variants need
/// p+q <= n-1, with n-p-q odd for B1..B4 and even for B5, B6; B3 needs p >= 2
/// and B4 needs q >= 2 (otherwise the defining rotation is the identity).
void validate(const FamilySpec& spec);

struct BuiltDigraph {
  Digraph graph;
  std::optional<Bipartition> sides;  // empty only for odd cycles
  /// B1 with p = 1 or B2 with q = 1: both ends of the attached path land on
  /// the same vertex, so the "path" closes into a cycle through it.
  bool degenerate_attachment = false;
};

/// Labeling: V_p = {1..p}, V_q = {p+1..p+q}, path vertices p+q+1..n in
/// path order. The bidirected K_{p,q} contributes all 2pq cross arcs; then
///   B1: 1 -> p+q+1 -> ... -> n -> p
///   B2: p+1 -> p+q+1 -> ... -> n -> p+q
///   B5: 1 -> p+q+1 -> ... -> n -> p+1
///   B6: p+1 -> p+q+1 -> ... -> n -> 1
///   B3 = B1 with (n,p) rotated to (n,1); B4 = B2 with (n,p+q) rotated to (n,p+1).
/// Path vertices alternate sides starting opposite the path's initial vertex.
/// path / cycle: 1 -> 2 -> ... -> n (-> 1).
BuiltDigraph build(const FamilySpec& spec);

/// G - (u,v) + (u,w). Requires (u,v) present, w != u and (u,w) absent; the
/// multiarc case allowed by the general rotation lemma is rejected here.
Digraph rotate_arc(const Digraph& g, Vertex u, Vertex v, Vertex w);

/// Replaces (u,v) with (u,w),(w,v) for a new vertex w = n+1.
Digraph subdivide_arc(const Digraph& g, Vertex u, Vertex v);

}  // namespace qindex
