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

#include <cstdint>
#include <vector>

#include "qindex/digraph.hpp"
#include "qindex/families.hpp"
#include "qindex/verify.hpp"

namespace qindex {

// Strongly connected bipartite digraphs on n vertices that contain the
// complete bipartite digraph on {1..p | p+1..p+q}. Each extra vertex
// p+q+1..n goes to one side; any subset of the cross arcs not already in
// K_{p,q} is added.

constexpr int kEnumerationOrderCap = 7;

struct EnumerationTask {
  int n = 0;
  int p = 0;
  int q = 0;
  double tol = 1e-10;
  /// Canonical side splits only, and one member per isomorphism class.
  bool dedup = false;
  /// <= 0 means every available thread.
  int workers = 0;
  int max_n = kEnumerationOrderCap;
};

/// p >= q >= 1, p+q <= n, n <= max_n, tol > 0; else InvalidInput.
/// p+q = n leaves no extra vertex, so the stream is K_{p,q} alone.
void validate(const EnumerationTask& task);

/// validate() plus p+q <= n-1, which certification needs.
void validate_certifiable(const EnumerationTask& task);

struct Member {
  Digraph graph;
  Bipartition sides;
};

struct EnumerationCounts {
  std::int64_t splits = 0;
  std::int64_t subsets = 0;          // arc subsets tried
  std::int64_t degree_feasible = 0;  // every in/out degree >= 1
  std::int64_t strongly_connected = 0;

  bool operator==(const EnumerationCounts&) const = default;
};

/// Members sorted by arc list. With dedup, the first member of each
/// isomorphism class in that order.
std::vector<Member> enumerate_Gnpq(const EnumerationTask& task, EnumerationCounts* counts = nullptr);

struct ExtremalReport {
  EnumerationTask task;
  EnumerationCounts counts;
  std::int64_t members = 0;  // after dedup when requested
  double min_q = 0.0;
  /// Every labeled member within the band of min_q, sorted by arc list.
  std::vector<Member> minimizers;
  double minimizer_spread = 0.0;  // max - min q over minimizers
  int minimizer_classes = 0;      // isomorphism classes among minimizers
  /// Smallest q above the band, NaN when none.
  double next_q = 0.0;
  Family predicted = Family::b1;
  double predicted_q = 0.0;
  bool predicted_attains = false;  // predicted member is isomorphic to a minimizer
  bool unique = false;             // minimizer_classes == 1
  double runtime_seconds = 0.0;
};

/// Scans every member in parallel chunks and merges in chunk order, so the
/// report is identical for any worker count.
ExtremalReport certify_minimum(const EnumerationTask& task);

/// Single-threaded reference for certify_minimum.
ExtremalReport certify_minimum_serial(const EnumerationTask& task);

/// Verdict: the predicted member attains the minimum, uniquely up to
/// isomorphism, and its value agrees with the closed-form route where one
/// applies. Mismatches carry the offending digraphs.
Certificate to_certificate(const ExtremalReport& report, const VerifyConfig& cfg = {});

/// Report document; runtime is included only when `with_runtime`.
json report_to_json(const ExtremalReport& report, const VerifyConfig& cfg = {}, bool with_runtime = false);

}  // namespace qindex
