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

#include <cmath>
#include <fstream>

#include "qindex/charpoly.hpp"
#include "qindex/enumerate.hpp"
#include "qindex/error.hpp"
#include "support.hpp"

using namespace qindex;

namespace {

json golden() {
  std::ifstream in(std::string(QINDEX_GOLDEN_DIR) + "/enumeration.json");
  REQUIRE(in.good());
  return json::parse(in);
}

bool contains_kpq(const Digraph& g, int p, int q) {
  for (Vertex l = 1; l <= p; ++l) {
    for (Vertex r = p + 1; r <= p + q; ++r) {
      if (!g.has_arc(l, r) || !g.has_arc(r, l)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("stream with no extra vertex is K(p,q) alone") {
  const auto doc = golden().at("stream").at(0);
  EnumerationCounts counts;
  const auto members = enumerate_Gnpq({3, 2, 1}, &counts);
  CHECK(static_cast<int>(members.size()) == doc.at("members").get<int>());
  CHECK(digraph_to_json(members.front().graph).at("arcs") == doc.at("arcs"));
}

TEST_CASE("every streamed member satisfies the membership conditions") {
  for (auto [n, p, q] : {std::array{4, 2, 1}, std::array{5, 2, 2}, std::array{6, 3, 1}}) {
    const auto members = enumerate_Gnpq({n, p, q});
    CHECK_FALSE(members.empty());
    for (const auto& m : members) {
      CHECK(testing::closure_strongly_connected(m.graph));
      CHECK(check_bipartition(m.graph, m.sides));
      CHECK(contains_kpq(m.graph, p, q));
    }
  }
}

TEST_CASE("B1(4,2,1) is in the stream") {
  const auto b1 = build({Family::b1, 4, 2, 1}).graph;
  const auto members = enumerate_Gnpq({4, 2, 1});
  CHECK(std::any_of(members.begin(), members.end(), [&](const Member& m) { return m.graph == b1; }));
}

TEST_CASE("dedup keeps one member per isomorphism class") {
  const auto all = enumerate_Gnpq({5, 2, 1});
  const auto reps = enumerate_Gnpq({5, 2, 1, 1e-10, true});
  CHECK(reps.size() < all.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(testing::brute_force_isomorphic(reps[i].graph, reps[j].graph));
  }
  // Every labeled member is isomorphic to some representative.
  for (const auto& m : all) {
    CHECK(std::any_of(reps.begin(), reps.end(), [&](const Member& r) { return are_isomorphic(m.graph, r.graph); }));
  }
}

TEST_CASE("adding a cross arc never lowers q and raises it strictly") {
  const auto members = enumerate_Gnpq({5, 2, 1});
  int checked = 0;
  for (const auto& m : members) {
    const double q0 = q_index(m.graph).q;
    for (Vertex l : m.sides.left) {
      for (Vertex r : m.sides.right) {
        for (Arc a : {Arc{l, r}, Arc{r, l}}) {
          if (m.graph.has_arc(a.tail, a.head)) continue;
          CHECK(q_index(m.graph.with_arc(a)).q > q0 + 1e-9);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("minimum values and counts match the golden file") {
  for (const auto& row : golden().at("minima")) {
    const int n = row.at("n");
    const int p = row.at("p");
    const int q = row.at("q");
    CAPTURE(n);
    CAPTURE(p);
    CAPTURE(q);
    const auto report = certify_minimum({n, p, q});
    CHECK(std::abs(report.min_q - row.at("min_q").get<double>()) <= 1e-9);
    CHECK(std::abs(report.next_q - row.at("next_q").get<double>()) <= 1e-9);
    CHECK(report.counts.strongly_connected == row.at("strongly_connected").get<std::int64_t>());
    CHECK(report.counts.degree_feasible == row.at("degree_feasible").get<std::int64_t>());
    CHECK(report.counts.subsets == row.at("subsets").get<std::int64_t>());
    CHECK(static_cast<int>(report.minimizers.size()) == row.at("labeled_minimizers").get<int>());
    CHECK(report.minimizer_classes == row.at("minimizer_classes").get<int>());
    CHECK(family_name(report.predicted) == row.at("family").get<std::string>());
    CHECK(report.unique);
    CHECK(report.predicted_attains);
    CHECK(to_certificate(report).verdict == Verdict::pass);
  }
}

TEST_CASE("golden minima agree with the closed form and with Eigen") {
  for (const auto& row : golden().at("minima")) {
    const int n = row.at("n");
    const int p = row.at("p");
    const int q = row.at("q");
    const double min_q = row.at("min_q");
    const auto fam = parse_family(row.at("family").get<std::string>());
    CHECK(std::abs(min_q - testing::eigen_q_index(build({fam, n, p, q}).graph)) <= 1e-8);
    if (fam == Family::b1 && p >= 2) CHECK(std::abs(min_q - largest_real_root({PolyKind::f, n, p, q}).root) <= 1e-7);
  }
}

TEST_CASE("parallel and serial reports are identical for any worker count") {
  for (auto [n, p, q] : {std::array{5, 2, 1}, std::array{6, 2, 2}, std::array{6, 3, 1}}) {
    const auto reference = report_to_json(certify_minimum_serial({n, p, q}));
    for (int workers : {1, 2, 3, 8}) {
      EnumerationTask task{n, p, q};
      task.workers = workers;
      CHECK(dump_json(report_to_json(certify_minimum(task))) == dump_json(reference));
    }
  }
}

TEST_CASE("canonical splits reach the same minimum") {
  for (auto [n, p, q] : {std::array{5, 2, 1}, std::array{6, 2, 2}}) {
    const auto full = certify_minimum({n, p, q});
    const auto canonical = certify_minimum({n, p, q, 1e-10, true});
    CHECK(canonical.counts.splits == n - p - q + 1);
    CHECK(canonical.min_q == full.min_q);
    CHECK(canonical.unique);
  }
}

TEST_CASE("report document") {
  const auto r = certify_minimum({4, 2, 1});
  const auto doc = report_to_json(r);
  CHECK(doc.at("minimizer").contains("bipartition"));
  CHECK_FALSE(doc.contains("runtime_seconds"));
  CHECK(report_to_json(r, {}, true).contains("runtime_seconds"));
  CHECK(doc.at("certificate").at("claim") == "thm8");
  CHECK(to_certificate(certify_minimum({5, 2, 1})).claim == "thm7");
}

TEST_CASE("a wrong prediction fails and carries counterexamples") {
  auto r = certify_minimum({4, 2, 1});
  r.predicted_attains = false;
  r.predicted_q += 0.5;
  const auto c = to_certificate(r);
  CHECK(c.verdict == Verdict::fail);
  CHECK(c.values.contains("counterexamples"));
}

TEST_CASE("task validation") {
  CHECK_THROWS_AS(enumerate_Gnpq({8, 2, 1}), InvalidInput);
  CHECK_THROWS_AS(enumerate_Gnpq({5, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(certify_minimum({3, 2, 1}), InvalidInput);
  EnumerationTask big{9, 2, 1};
  big.max_n = 9;
  CHECK_THROWS_AS(enumerate_Gnpq(big), InvalidInput);
}
