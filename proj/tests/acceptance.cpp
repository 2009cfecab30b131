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

// Acceptance runner. `acceptance N` checks criterion N, `acceptance` checks
// all of them. One PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "qindex/charpoly.hpp"
#include "qindex/enumerate.hpp"
#include "qindex/families.hpp"
#include "qindex/spectral.hpp"
#include "qindex/verify.hpp"

namespace {

using namespace qindex;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) { return format_double(v); }

std::string secs(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", v);
  return buf;
}

const Grid kGrid{3, 16, 5, 5};

Outcome complete_bipartite() {
  const auto start = Clock::now();
  double worst = 0.0;
  int cases = 0;
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= p; ++q) {
      const double r = q_index(build({Family::kpq, p + q, p, q}).graph).q;
      worst = std::max(worst, std::abs(r - (p + q)));
      ++cases;
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-9 && elapsed < 5.0, std::to_string(cases) + " cases, max |q - (p+q)| = " + fmt(worst) +
                                              ", " + secs(elapsed)};
}

Outcome correctness_triangle() {
  const auto start = Clock::now();
  int points = 0;
  int failures = 0;
  int core_points = 0;
  int core_failures = 0;
  std::string first_failure;
  for (const auto& at : grid_points("charpoly-cross", kGrid)) {
    const double q1 = q_index(build({Family::b1, at.n, at.p, at.q}).graph).q;
    const double q2 = q_index(build({Family::b2, at.n, at.p, at.q}).graph).q;
    const double f = largest_real_root({PolyKind::f, at.n, at.p, at.q}).root;
    const double g = largest_real_root({PolyKind::g, at.n, at.p, at.q}).root;
    const bool ok = std::abs(q1 - f) <= 1e-7 && std::abs(q2 - g) <= 1e-7;
    ++points;
    if (!ok) {
      ++failures;
      if (first_failure.empty()) {
        first_failure = "(" + std::to_string(at.n) + "," + std::to_string(at.p) + "," + std::to_string(at.q) +
                        "): q(B1)=" + fmt(q1) + " root(f)=" + fmt(f) + " q(B2)=" + fmt(q2) + " root(g)=" + fmt(g);
      }
    }
    if (at.q >= 2) {
      ++core_points;
      if (!ok) ++core_failures;
    }
  }
  const double elapsed = seconds_since(start);
  std::string detail = std::to_string(failures) + "/" + std::to_string(points) + " grid points outside 1e-7";
  if (!first_failure.empty()) detail += "; first " + first_failure;
  detail += "; subgrid q >= 2: " + std::to_string(core_failures) + "/" + std::to_string(core_points) + " outside; " +
            secs(elapsed);
  return {failures == 0 && elapsed < 30.0, detail};
}

Outcome theorem_suite() {
  int total = 0;
  int failures = 0;
  int not_applicable = 0;
  int failures_off_pq1 = 0;
  std::string failed;
  for (const char* claim : {"thm1", "thm2", "thm3", "thm4", "thm5", "thm6"}) {
    for (const auto& c : run_grid(claim, kGrid, {}, 0)) {
      ++total;
      if (c.verdict == Verdict::not_applicable) ++not_applicable;
      if (c.verdict != Verdict::fail) continue;
      ++failures;
      const int p = c.params.at("p");
      const int q = c.params.at("q");
      if (!(p == 1 && q == 1)) ++failures_off_pq1;
      if (failed.size() < 200) failed += " " + c.claim + c.params.dump();
    }
  }
  std::string detail = std::to_string(failures) + " failures in " + std::to_string(total) + " certificates (" +
                       std::to_string(not_applicable) + " not applicable); failures away from p = q = 1: " +
                       std::to_string(failures_off_pq1);
  if (!failed.empty()) detail += ";" + failed;
  return {failures == 0, detail};
}

Outcome extremality() {
  std::ifstream in(std::string(QINDEX_GOLDEN_DIR) + "/enumeration.json");
  const auto golden = json::parse(in);
  bool pass = true;
  std::string detail;
  for (const auto& row : golden.at("minima")) {
    const int n = row.at("n");
    const int p = row.at("p");
    const int q = row.at("q");
    const auto start = Clock::now();
    const auto report = certify_minimum({n, p, q});
    const double elapsed = seconds_since(start);
    const auto cert = to_certificate(report);
    const bool golden_ok = std::abs(report.min_q - row.at("min_q").get<double>()) <= 1e-9;
    const bool ok = cert.verdict == Verdict::pass && golden_ok && elapsed < 60.0;
    pass = pass && ok;
    detail += " (" + std::to_string(n) + "," + std::to_string(p) + "," + std::to_string(q) +
              ")=" + std::string(family_name(report.predicted)) + " q=" + fmt(report.min_q) + (ok ? " ok" : " FAIL") +
              " " + secs(elapsed) + ";";
  }
  return {pass, detail};
}

Outcome perron_structure() {
  int failures = 0;
  int checked = 0;
  for (auto [n, p, q] : {std::array{4, 2, 1}, std::array{6, 2, 1}, std::array{8, 3, 2}}) {
    for (const auto& c : {check_perron_structure(n, p, q, Family::b1), check_lemma6(n, p, q)}) {
      ++checked;
      if (c.verdict != Verdict::pass) ++failures;
    }
  }
  int chains = 0;
  int chain_failures = 0;
  const auto odd = grid_points("thm1", kGrid);
  const auto even = grid_points("thm4", kGrid);
  for (Family f : {Family::b1, Family::b2, Family::b5, Family::b6}) {
    const bool odd_family = f == Family::b1 || f == Family::b2;
    for (const auto& at : odd_family ? odd : even) {
      const auto c = check_lemma4_family({f, at.n, at.p, at.q});
      if (c.verdict == Verdict::not_applicable) continue;
      ++chains;
      if (c.verdict != Verdict::pass) ++chain_failures;
    }
  }
  return {failures == 0 && chain_failures == 0,
          std::to_string(checked - failures) + "/" + std::to_string(checked) +
              " residual and Perron-entry certificates pass; path chains " + std::to_string(chains - chain_failures) +
              "/" + std::to_string(chains) + " strictly increasing"};
}

Outcome transformations() {
  int failures = 0;
  std::string detail;
  for (const char* claim : {"lemma5", "lemma1", "lemma3"}) {
    const auto certs = run_lemma_samples(claim, 200, 20260101, 8, {});
    int bad = 0;
    for (const auto& c : certs) bad += c.verdict == Verdict::fail ? 1 : 0;
    failures += bad;
    detail += std::string(" ") + claim + ": " + std::to_string(bad) + "/" + std::to_string(certs.size()) +
              " violations;";
  }
  return {failures == 0, detail};
}

// Every certificate artifact the suite writes, as JSONL and CSV text.
std::pair<std::string, std::string> suite_artifacts(int workers) {
  std::vector<Certificate> all;
  for (const char* claim : {"thm1", "thm2", "thm3", "thm4", "thm5", "thm6", "chain", "lemma6", "charpoly-cross",
                            "perron", "lemma4"}) {
    auto certs = run_grid(claim, kGrid, {}, workers);
    std::move(certs.begin(), certs.end(), std::back_inserter(all));
  }
  for (const char* claim : {"lemma1", "lemma3", "lemma5"}) {
    auto certs = run_lemma_samples(claim, 200, 20260101, 8, {});
    std::move(certs.begin(), certs.end(), std::back_inserter(all));
  }
  std::string reports;
  for (auto [n, p, q] : {std::array{4, 2, 1}, std::array{5, 2, 1}, std::array{5, 3, 1}, std::array{6, 2, 2},
                         std::array{6, 3, 1}}) {
    EnumerationTask task{n, p, q};
    task.workers = workers;
    const auto report = certify_minimum(task);
    all.push_back(to_certificate(report));
    reports += dump_json(report_to_json(report)) + "\n";
  }
  return {to_jsonl(all) + reports, to_csv(all)};
}

Outcome determinism() {
  const auto first = suite_artifacts(0);
  const auto second = suite_artifacts(0);
  const auto serialish = suite_artifacts(1);
  const bool same = first == second && first == serialish;
  // Leave the artifacts behind for inspection.
  std::ofstream("acceptance_suite.jsonl", std::ios::binary) << first.first;
  std::ofstream("acceptance_suite.csv", std::ios::binary) << first.second;
  return {same, std::to_string(first.first.size()) + " JSONL bytes, " + std::to_string(first.second.size()) +
                    " CSV bytes; two runs " + (first == second ? "identical" : "DIFFER") + ", 1-worker run " +
                    (first == serialish ? "identical" : "DIFFERS")};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"complete bipartite baseline", complete_bipartite},
      {"spectral vs closed-form roots on the grid", correctness_triangle},
      {"theorem suite on the grid", theorem_suite},
      {"exhaustive extremality", extremality},
      {"Perron structure", perron_structure},
      {"transformation properties", transformations},
      {"determinism", determinism},
  };
  std::vector<int> selected;
  if (argc > 1) {
    for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));
  } else {
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) selected.push_back(i);
  }
  int failed = 0;
  for (int id : selected) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::printf("criterion %d: unknown\n", id);
      return 2;
    }
    const auto& c = criteria[static_cast<std::size_t>(id - 1)];
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d [%s]: %s - %s\n", id, c.title, out.pass ? "PASS" : "FAIL", out.detail.c_str());
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
