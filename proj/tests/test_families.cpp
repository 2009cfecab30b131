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

#include <doctest.h>

#include <set>

#include "qindex/error.hpp"
#include "qindex/families.hpp"

using namespace qindex;

namespace {

std::set<Arc> arc_set(const Digraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

std::vector<Arc> kpq_arcs(int p, int q) {
  std::vector<Arc> arcs;
  for (Vertex l = 1; l <= p; ++l) {
    for (Vertex r = p + 1; r <= p + q; ++r) {
      arcs.push_back({l, r});
      arcs.push_back({r, l});
    }
  }
  return arcs;
}

// K_{p,q} plus a path from `from` through `extra` new vertices to `to`,
// with no parity restriction.
Digraph with_path(int p, int q, int extra, Vertex from, Vertex to) {
  auto arcs = kpq_arcs(p, q);
  Vertex prev = from;
  for (int i = 1; i <= extra; ++i) {
    arcs.push_back({prev, p + q + i});
    prev = p + q + i;
  }
  arcs.push_back({prev, to});
  return Digraph(p + q + extra, arcs);
}

}  // namespace

TEST_CASE("complete bipartite digraph") {
  const auto k = build({Family::kpq, 3, 2, 1});
  CHECK(arc_set(k.graph) == std::set<Arc>{{1, 3}, {3, 1}, {2, 3}, {3, 2}});
  CHECK(build({Family::kpq, 5, 3, 2}).graph.arc_count() == 12);
}

TEST_CASE("B1(4,2,1) adds the path 1 -> 4 -> 2") {
  const auto b = build({Family::b1, 4, 2, 1});
  auto expected = kpq_arcs(2, 1);
  expected.push_back({1, 4});
  expected.push_back({4, 2});
  CHECK(arc_set(b.graph) == std::set<Arc>(expected.begin(), expected.end()));
  CHECK(b.graph.arc_count() == 6);
  CHECK_FALSE(b.degenerate_attachment);
}

TEST_CASE("B5(6,2,2) adds the path 1 -> 5 -> 6 -> 3") {
  const auto b = build({Family::b5, 6, 2, 2});
  auto expected = kpq_arcs(2, 2);
  for (Arc a : {Arc{1, 5}, Arc{5, 6}, Arc{6, 3}}) expected.push_back(a);
  CHECK(arc_set(b.graph) == std::set<Arc>(expected.begin(), expected.end()));
}

TEST_CASE("path endpoints of each family") {
  CHECK(build({Family::b2, 6, 2, 1}).graph == with_path(2, 1, 3, 3, 3));
  CHECK(build({Family::b2, 8, 3, 2}).graph == with_path(3, 2, 3, 4, 5));
  CHECK(build({Family::b6, 7, 3, 2}).graph == with_path(3, 2, 2, 4, 1));
  CHECK(build({Family::b5, 7, 3, 2}).graph == with_path(3, 2, 2, 1, 4));
}

TEST_CASE("parity and shape violations") {
  CHECK_THROWS_AS(build({Family::b1, 5, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(build({Family::b5, 4, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(build({Family::b1, 4, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(build({Family::b1, 3, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(build({Family::kpq, 6, 3, 2}), InvalidInput);
  CHECK_THROWS_AS(build({Family::b3, 4, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(build({Family::b4, 6, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(parse_family("b7"), InvalidInput);
  CHECK(parse_family("b3") == Family::b3);
  CHECK(family_name(Family::cycle) == "cycle");
}

TEST_CASE("degenerate attachment is flagged") {
  CHECK(build({Family::b1, 5, 1, 1}).degenerate_attachment);
  CHECK(build({Family::b2, 4, 2, 1}).degenerate_attachment);
  CHECK_FALSE(build({Family::b2, 7, 2, 2}).degenerate_attachment);
}

TEST_CASE("every member is strongly connected, bipartite and contains K(p,q)") {
  for (int n = 3; n <= 12; ++n) {
    for (int p = 1; p <= 5; ++p) {
      for (int q = 1; q <= p && p + q <= n - 1; ++q) {
        const bool odd = (n - p - q) % 2 == 1;
        for (Family f : {Family::b1, Family::b2, Family::b3, Family::b4, Family::b5, Family::b6}) {
          const bool family_odd = f == Family::b1 || f == Family::b2 || f == Family::b3 || f == Family::b4;
          if (odd != family_odd || (f == Family::b3 && p < 2) || (f == Family::b4 && q < 2)) continue;
          const auto b = build({f, n, p, q});
          CAPTURE(family_name(f));
          CAPTURE(n);
          REQUIRE(b.sides);
          CHECK(b.graph.order() == n);
          CHECK(is_strongly_connected(b.graph));
          CHECK(check_bipartition(b.graph, *b.sides));
          for (Arc a : kpq_arcs(p, q)) CHECK(b.graph.has_arc(a.tail, a.head));
        }
      }
    }
  }
}

TEST_CASE("B3 and B4 are rotations of B1 and B2") {
  for (auto [n, p, q] : {std::array{6, 3, 2}, std::array{8, 3, 2}, std::array{9, 2, 2}}) {
    CHECK(build({Family::b3, n, p, q}).graph == rotate_arc(build({Family::b1, n, p, q}).graph, n, p, 1));
    CHECK(build({Family::b4, n, p, q}).graph == rotate_arc(build({Family::b2, n, p, q}).graph, n, p + q, p + 1));
  }
}

TEST_CASE("rotating the closing arc of B1 onto v_(p+1) gives the B5 shape") {
  const auto rotated = rotate_arc(build({Family::b1, 6, 2, 1}).graph, 6, 2, 3);
  CHECK(rotated == with_path(2, 1, 3, 1, 3));
}

TEST_CASE("rotation round trip and errors") {
  const auto g = build({Family::b1, 6, 3, 2}).graph;
  CHECK(rotate_arc(rotate_arc(g, 6, 3, 1), 6, 1, 3) == g);
  CHECK_THROWS_AS(rotate_arc(g, 6, 2, 1), InvalidInput);  // not an arc
  CHECK_THROWS_AS(rotate_arc(g, 6, 3, 6), InvalidInput);  // loop
  CHECK_THROWS_AS(rotate_arc(g, 1, 4, 5), InvalidInput);  // (1,5) exists
}

TEST_CASE("subdivision") {
  const auto c3 = build({Family::cycle, 3, 0, 0}).graph;
  const auto c4 = subdivide_arc(c3, 1, 2);
  CHECK(c4.order() == 4);
  CHECK(is_directed_cycle(c4));

  // Subdividing the first path arc of B1 lengthens its path.
  const auto b1 = build({Family::b1, 6, 2, 1}).graph;
  const auto longer = subdivide_arc(b1, 1, 4);
  CHECK(are_isomorphic(longer, with_path(2, 1, 4, 1, 2)));

  Digraph g = b1;
  for (int k = 1; k <= 3; ++k) g = subdivide_arc(g, 1, k == 1 ? 4 : g.order());  // the new vertex is last
  CHECK(g.order() == 9);
  CHECK_THROWS_AS(subdivide_arc(b1, 4, 1), InvalidInput);
}

TEST_CASE("path and cycle builders") {
  const auto path = build({Family::path, 4, 0, 0});
  CHECK(path.graph.arc_count() == 3);
  CHECK_FALSE(is_strongly_connected(path.graph));
  CHECK(is_directed_cycle(build({Family::cycle, 5, 0, 0}).graph));
  CHECK_FALSE(build({Family::cycle, 5, 0, 0}).sides.has_value());
  CHECK(build({Family::cycle, 4, 0, 0}).sides.has_value());
}
