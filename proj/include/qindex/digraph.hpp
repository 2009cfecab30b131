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

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace qindex {

/// Vertices are labeled 1..n.
using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Simple labeled digraph. Immutable once built: no loops, no duplicate arcs,
/// arcs kept sorted lexicographically so that serialization is deterministic.
///
/// Because the arc list is sorted by tail it doubles as a CSR layout; the
/// out-neighbors of v are a contiguous slice of heads_.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);
  /// Duplicate arcs collapse (set semantics). Loops and out-of-range
  /// endpoints throw InvalidInput.
  Digraph(int order, std::vector<Arc> arcs);

  int order() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }

  bool has_arc(Vertex tail, Vertex head) const;
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;
  std::span<const Vertex> out_neighbors(Vertex v) const;

  Digraph with_arc(Arc a) const;
  Digraph without_arc(Arc a) const;

  /// Subdigraph induced on `vertices`; vertex vertices[k] becomes k+1.
  Digraph induced(std::span<const Vertex> vertices) const;

  /// Relabels vertex v as mapping[v-1]. `mapping` must be a permutation of 1..n.
  Digraph relabeled(std::span<const Vertex> mapping) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  void check_vertex(Vertex v) const;
  void index();

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Vertex> heads_;
  std::vector<std::size_t> offsets_;
  std::vector<int> in_degree_;
};

/// Two disjoint vertex classes covering 1..n. Both lists are kept sorted.
struct Bipartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;

  bool operator==(const Bipartition&) const = default;
};

int out_degree(const Digraph& g, Vertex v);

/// Maximal strongly connected components. Each component is sorted and the
/// components are ordered by their smallest vertex.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

/// True iff g is a single directed cycle through all of its vertices.
bool is_directed_cycle(const Digraph& g);

/// Throws InvalidInput when the classes overlap or miss a vertex; otherwise
/// reports whether every arc crosses between the classes.
bool check_bipartition(const Digraph& g, const Bipartition& sides);

/// Largest order accepted by the isomorphism search.
inline constexpr int kIsomorphismOrderCap = 10;

/// Arc-preserving bijection `m` (vertex v of g maps to m[v-1] of h), if any.
/// Backtracking over degree-compatible candidates; throws InvalidInput above
/// `max_order` vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g, const Digraph& h,
                                                    int max_order = kIsomorphismOrderCap);

bool are_isomorphic(const Digraph& g, const Digraph& h, int max_order = kIsomorphismOrderCap);

}  // namespace qindex
