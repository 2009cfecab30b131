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

#include <random>

#include "qindex/digraph.hpp"
#include "qindex/error.hpp"
#include "qindex/families.hpp"
#include "qindex/json_io.hpp"
#include "support.hpp"

using namespace qindex;

namespace {

Digraph cycle(int n) {
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= n; ++v) arcs.push_back({v, v % n + 1});
  return Digraph(n, arcs);
}

}  // namespace

TEST_CASE("construction keeps a sorted arc set") {
  const Digraph g(3, {{2, 1}, {1, 2}, {2, 1}, {2, 3}});
  CHECK(g.arc_count() == 3);
  CHECK(g.arcs()[0] == Arc{1, 2});
  CHECK(g.has_arc(2, 3));
  CHECK_FALSE(g.has_arc(3, 2));
  CHECK(g.out_degree(2) == 2);
  CHECK(g.in_degree(1) == 1);
  CHECK(out_degree(g, 3) == 0);
}

TEST_CASE("loops and out-of-range vertices are rejected") {
  CHECK_THROWS_AS(Digraph(2, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Digraph(2, {{1, 3}}), InvalidInput);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}}), InvalidInput);
}

TEST_CASE("arc edits") {
  const Digraph g(3, {{1, 2}});
  CHECK(g.with_arc({2, 3}).arc_count() == 2);
  CHECK(g.without_arc({1, 2}).arc_count() == 0);
  CHECK_THROWS_AS(g.without_arc({2, 1}), InvalidInput);
}

TEST_CASE("induced subdigraph relabels in the given order") {
  const Digraph g(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const std::vector<Vertex> keep{3, 4};
  const auto h = g.induced(keep);
  CHECK(h.order() == 2);
  CHECK(h == Digraph(2, {{1, 2}}));
}

TEST_CASE("strong components") {
  CHECK(is_strongly_connected(cycle(5)));
  CHECK_FALSE(is_strongly_connected(Digraph(3, {{1, 2}, {2, 1}})));
  CHECK(is_strongly_connected(Digraph(1)));

  // Two 2-cycles joined by a single arc.
  const Digraph g(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}, {2, 3}});
  const auto comps = strongly_connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{1, 2});
  CHECK(comps[1] == std::vector<Vertex>{3, 4});
}

TEST_CASE("directed cycle detection") {
  CHECK(is_directed_cycle(cycle(3)));
  CHECK_FALSE(is_directed_cycle(cycle(3).with_arc({2, 1})));
  CHECK_FALSE(is_directed_cycle(Digraph(3, {{1, 2}, {2, 3}})));
}

TEST_CASE("bipartition check") {
  const auto k = build({Family::kpq, 5, 3, 2});
  REQUIRE(k.sides);
  CHECK(check_bipartition(k.graph, *k.sides));
  CHECK_FALSE(check_bipartition(cycle(3), Bipartition{{1}, {2, 3}}));
  CHECK_THROWS_AS(check_bipartition(cycle(3), Bipartition{{1, 2}, {2, 3}}), InvalidInput);
  CHECK_THROWS_AS(check_bipartition(cycle(3), Bipartition{{1}, {2}}), InvalidInput);
}

TEST_CASE("isomorphism agrees with the brute-force oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto g = testing::random_digraph(rng, n, 0.4);
    const auto h = (trial % 2 == 0) ? g.relabeled(testing::random_permutation(rng, n))
                                    : testing::random_digraph(rng, n, 0.4);
    const auto found = find_isomorphism(g, h);
    CHECK(found.has_value() == testing::brute_force_isomorphic(g, h));
    if (found) CHECK(g.relabeled(*found) == h);
  }
}

TEST_CASE("isomorphism is an equivalence on random samples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_digraph(rng, 6, 0.5);
    const auto b = a.relabeled(testing::random_permutation(rng, 6));
    const auto c = b.relabeled(testing::random_permutation(rng, 6));
    CHECK(are_isomorphic(a, a));
    CHECK(are_isomorphic(b, a));
    CHECK(are_isomorphic(a, c));
  }
}

TEST_CASE("isomorphism separates same-degree digraphs") {
  // Two 3-cycles vs a 6-cycle: same degree sequence.
  const Digraph two(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
  CHECK_FALSE(are_isomorphic(two, cycle(6)));
  CHECK_THROWS_AS(are_isomorphic(cycle(11), cycle(11)), InvalidInput);
}

TEST_CASE("strong connectivity is relabeling invariant and matches the closure oracle") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto g = testing::random_digraph(rng, n, 0.3);
    const bool sc = is_strongly_connected(g);
    CHECK(sc == testing::closure_strongly_connected(g));
    CHECK(sc == is_strongly_connected(g.relabeled(testing::random_permutation(rng, n))));
  }
}

TEST_CASE("json round trip") {
  const auto b = build({Family::b1, 4, 2, 1});
  const auto doc = digraph_to_json(b.graph, b.sides);
  CHECK(dump_json(doc) == R"({"arcs":[[1,3],[1,4],[2,3],[3,1],[3,2],[4,2]],"bipartition":{"left":[1,2],"right":[3,4]},"n":4})");
  const auto [g, sides] = digraph_from_json(doc);
  CHECK(g == b.graph);
  CHECK(sides == b.sides);
  CHECK_THROWS_AS(digraph_from_json(json{{"n", 2}}), InvalidInput);
  CHECK_THROWS_AS(digraph_from_json(json::parse(R"({"n":2,"arcs":[[1,1]]})")), InvalidInput);
}

TEST_CASE("float formatting round-trips at 17 digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(5.0) == "5");
  CHECK(std::stod(format_double(3.3247179572447467)) == 3.3247179572447467);
}

TEST_CASE("dot export") {
  const auto dot = digraph_to_dot(Digraph(2, {{1, 2}}));
  CHECK(dot.find("1 -> 2;") != std::string::npos);
  CHECK(dot.rfind("digraph {", 0) == 0);
}
