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

// Reference path for certify_minimum: one thread, no chunking, and the
// library digraph routines in place of the bitmask filter.

#include <algorithm>
#include <chrono>
#include <limits>

#include "enumerate_internal.hpp"

namespace qindex {

ExtremalReport certify_minimum_serial(const EnumerationTask& task) {
  validate_certifiable(task);
  const auto start = std::chrono::steady_clock::now();
  const auto splits = detail::make_splits(task, task.dedup);
  EnumerationCounts counts;
  counts.splits = static_cast<std::int64_t>(splits.size());
  std::vector<detail::Scored> scored;
  for (const auto& split : splits) {
    const std::uint64_t total = std::uint64_t{1} << split.optional.size();
    for (std::uint64_t subset = 0; subset < total; ++subset) {
      ++counts.subsets;
      Digraph g(task.n, detail::arcs_for(split, subset));
      bool degrees = true;
      for (Vertex v = 1; v <= task.n; ++v) degrees = degrees && g.out_degree(v) >= 1 && g.in_degree(v) >= 1;
      if (!degrees) continue;
      ++counts.degree_feasible;
      if (!is_strongly_connected(g)) continue;
      ++counts.strongly_connected;
      const double q = q_index(g, SpectralOptions{task.tol}).q;
      scored.push_back({q, Member{std::move(g), split.sides}});
    }
  }

  const double band = 10.0 * task.tol;
  double min_q = std::numeric_limits<double>::infinity();
  for (const auto& s : scored) min_q = std::min(min_q, s.q);
  double next_q = std::numeric_limits<double>::infinity();
  std::vector<detail::Scored> near;
  for (auto& s : scored) {
    if (s.q <= min_q + band) {
      near.push_back(std::move(s));
    } else {
      next_q = std::min(next_q, s.q);
    }
  }
  auto report = detail::finish_report(task, counts, counts.strongly_connected, min_q, std::move(near), next_q);
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qindex
