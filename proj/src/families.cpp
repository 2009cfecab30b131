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

#include "qindex/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "qindex/error.hpp"

namespace qindex {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kNames{{
    {Family::kpq, "kpq"},
    {Family::b1, "b1"},
    {Family::b2, "b2"},
    {Family::b3, "b3"},
    {Family::b4, "b4"},
    {Family::b5, "b5"},
    {Family::b6, "b6"},
    {Family::path, "path"},
    {Family::cycle, "cycle"},
}};

std::string describe(const FamilySpec& s) {
  return std::string(family_name(s.variant)) + "(n=" + std::to_string(s.n) + ", p=" + std::to_string(s.p) +
         ", q=" + std::to_string(s.q) + ")";
}

bool odd_path_family(Family f) {
  return f == Family::b1 || f == Family::b2 || f == Family::b3 || f == Family::b4;
}

std::vector<Arc> complete_bipartite_arcs(int p, int q) {
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= p; ++u) {
    for (Vertex w = p + 1; w <= p + q; ++w) {
      arcs.push_back({u, w});
      arcs.push_back({w, u});
    }
  }
  return arcs;
}

// K_{p,q} plus the path start -> p+q+1 -> ... -> n -> end.
BuiltDigraph attach_path(const FamilySpec& s, Vertex start, Vertex end) {
  auto arcs = complete_bipartite_arcs(s.p, s.q);
  Vertex prev = start;
  for (Vertex v = s.p + s.q + 1; v <= s.n; ++v) {
    arcs.push_back({prev, v});
    prev = v;
  }
  arcs.push_back({prev, end});

  Bipartition sides;
  for (Vertex v = 1; v <= s.p; ++v) sides.left.push_back(v);
  for (Vertex v = s.p + 1; v <= s.p + s.q; ++v) sides.right.push_back(v);
  bool on_left = start > s.p;  // first path vertex sits opposite the start
  for (Vertex v = s.p + s.q + 1; v <= s.n; ++v) {
    (on_left ? sides.left : sides.right).push_back(v);
    on_left = !on_left;
  }
  std::sort(sides.left.begin(), sides.left.end());
  std::sort(sides.right.begin(), sides.right.end());
  return BuiltDigraph{Digraph(s.n, std::move(arcs)), std::move(sides), start == end};
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, n] : kNames) {
    if (n == name) return family;
  }
  throw InvalidInput("unknown family '" + std::string(name) + "' (expected kpq, b1..b6, path, cycle)");
}

void validate(const FamilySpec& s) {
  if (s.variant == Family::path || s.variant == Family::cycle) {
    const int min_n = s.variant == Family::cycle ? 2 : 1;
    if (s.n < min_n) throw InvalidInput(describe(s) + ": needs n >= " + std::to_string(min_n));
    return;
  }
  if (s.q < 1) throw InvalidInput(describe(s) + ": needs q >= 1");
  if (s.p < s.q) throw InvalidInput(describe(s) + ": needs p >= q");
  if (s.variant == Family::kpq) {
    if (s.n != s.p + s.q) throw InvalidInput(describe(s) + ": kpq needs n = p+q");
    return;
  }
  if (s.p + s.q > s.n - 1) throw InvalidInput(describe(s) + ": needs p+q <= n-1");
  const int extra = s.n - s.p - s.q;
  if (odd_path_family(s.variant) && extra % 2 == 0) {
    throw InvalidInput(describe(s) + ": n-p-q = " + std::to_string(extra) + " is even; this family needs it odd");
  }
  if ((s.variant == Family::b5 || s.variant == Family::b6) && extra % 2 == 1) {
    throw InvalidInput(describe(s) + ": n-p-q = " + std::to_string(extra) + " is odd; this family needs it even");
  }
  if (s.variant == Family::b3 && s.p < 2) {
    throw InvalidInput(describe(s) + ": needs p >= 2 (with p = 1 the rotation onto v_1 is the identity)");
  }
  if (s.variant == Family::b4 && s.q < 2) {
    throw InvalidInput(describe(s) + ": needs q >= 2 (with q = 1 the rotation onto v_{p+1} is the identity)");
  }
}

namespace {

BuiltDigraph make(const FamilySpec& s) {
  switch (s.variant) {
    case Family::kpq: {
      Bipartition sides;
      for (Vertex v = 1; v <= s.p; ++v) sides.left.push_back(v);
      for (Vertex v = s.p + 1; v <= s.n; ++v) sides.right.push_back(v);
      return BuiltDigraph{Digraph(s.n, complete_bipartite_arcs(s.p, s.q)), std::move(sides), false};
    }
    case Family::b1:
      return attach_path(s, 1, s.p);
    case Family::b2:
      return attach_path(s, s.p + 1, s.p + s.q);
    case Family::b5:
      return attach_path(s, 1, s.p + 1);
    case Family::b6:
      return attach_path(s, s.p + 1, 1);
    case Family::b3: {
      auto base = make({Family::b1, s.n, s.p, s.q});
      base.graph = rotate_arc(base.graph, s.n, s.p, 1);
      return base;
    }
    case Family::b4: {
      auto base = make({Family::b2, s.n, s.p, s.q});
      base.graph = rotate_arc(base.graph, s.n, s.p + s.q, s.p + 1);
      return base;
    }
    case Family::path:
    case Family::cycle: {
      std::vector<Arc> arcs;
      for (Vertex v = 1; v < s.n; ++v) arcs.push_back({v, v + 1});
      if (s.variant == Family::cycle) arcs.push_back({s.n, 1});
      std::optional<Bipartition> sides;
      if (s.variant == Family::path || s.n % 2 == 0) {
        Bipartition b;
        for (Vertex v = 1; v <= s.n; ++v) (v % 2 == 1 ? b.left : b.right).push_back(v);
        sides = std::move(b);
      }
      return BuiltDigraph{Digraph(s.n, std::move(arcs)), std::move(sides), false};
    }
  }
  throw InvalidInput("unhandled family");
}

}  // namespace

BuiltDigraph build(const FamilySpec& s) {
  validate(s);
  auto out = make(s);
  if (s.variant != Family::path && s.variant != Family::cycle) {
    if (!is_strongly_connected(out.graph) || !out.sides || !check_bipartition(out.graph, *out.sides)) {
      throw std::logic_error(describe(s) + ": builder produced a digraph outside G_{n,p,q}");
    }
  }
  return out;
}

Digraph rotate_arc(const Digraph& g, Vertex u, Vertex v, Vertex w) {
  if (!g.has_arc(u, v)) {
    throw InvalidInput("rotate_arc: (" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
  }
  if (w == u) throw InvalidInput("rotate_arc: (u,w) would be a loop");
  if (g.has_arc(u, w)) {
    throw InvalidInput("rotate_arc: (" + std::to_string(u) + "," + std::to_string(w) + ") already present; result would have a multiarc");
  }
  return g.without_arc({u, v}).with_arc({u, w});
}

Digraph subdivide_arc(const Digraph& g, Vertex u, Vertex v) {
  if (!g.has_arc(u, v)) {
    throw InvalidInput("subdivide_arc: (" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
  }
  const Vertex w = g.order() + 1;
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  std::erase(arcs, Arc{u, v});
  arcs.push_back({u, w});
  arcs.push_back({w, v});
  return Digraph(w, std::move(arcs));
}

}  // namespace qindex
