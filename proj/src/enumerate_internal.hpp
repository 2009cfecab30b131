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

#include "qindex/enumerate.hpp"

namespace qindex::detail {

// One assignment of the extra vertices to sides.
struct Split {
  Bipartition sides;
  std::vector<Arc> mandatory;  // K_{p,q}, both directions
  std::vector<Arc> optional;   // remaining cross arcs, bit i of a subset picks optional[i]
};

/// All 2^(n-p-q) splits, or with `canonical` only those where the extra
/// vertices sent left precede the ones sent right (extras are
/// interchangeable, so these cover every member up to relabeling).
std::vector<Split> make_splits(const EnumerationTask& task, bool canonical);

std::vector<Arc> arcs_for(const Split& split, std::uint64_t subset);

struct Scored {
  double q = 0.0;
  Member member;
};

bool arc_order(const Member& a, const Member& b);

/// Shared tail of both certify paths. `near` holds every member within the
/// band of `min_q` (any order); `next_q` is the smallest value above it.
ExtremalReport finish_report(const EnumerationTask& task, const EnumerationCounts& counts, std::int64_t members,
                             double min_q, std::vector<Scored> near, double next_q);

}  // namespace qindex::detail
