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

#include "qindex/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "enumerate_internal.hpp"
#include "qindex/charpoly.hpp"
#include "qindex/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qindex {
namespace detail {

std::vector<Split> make_splits(const EnumerationTask& task, bool canonical) {
  const int extra = task.n - task.p - task.q;
  std::vector<Split> out;
  for (std::uint32_t mask = 0; mask < (1u << extra); ++mask) {
    // Canonical: right-going extras form a suffix.
    const std::uint32_t full = (1u << extra) - 1u;
    if (canonical && mask != 0 && (mask | ((1u << std::countr_zero(mask)) - 1u)) != full) continue;
    Split s;
    for (Vertex v = 1; v <= task.p; ++v) s.sides.left.push_back(v);
    for (Vertex v = task.p + 1; v <= task.p + task.q; ++v) s.sides.right.push_back(v);
    for (int i = 0; i < extra; ++i) {
      const Vertex v = task.p + task.q + 1 + i;
      ((mask >> i) & 1u ? s.sides.right : s.sides.left).push_back(v);
    }
    for (Vertex l : s.sides.left) {
      for (Vertex r : s.sides.right) {
        const bool core = l <= task.p && r > task.p && r <= task.p + task.q;
        (core ? s.mandatory : s.optional).push_back({l, r});
        (core ? s.mandatory : s.optional).push_back({r, l});
      }
    }
    std::sort(s.optional.begin(), s.optional.end());
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Arc> arcs_for(const Split& split, std::uint64_t subset) {
  std::vector<Arc> arcs = split.mandatory;
  for (; subset != 0; subset &= subset - 1) arcs.push_back(split.optional[static_cast<std::size_t>(std::countr_zero(subset))]);
  return arcs;
}

bool arc_order(const Member& a, const Member& b) {
  return std::lexicographical_compare(a.graph.arcs().begin(), a.graph.arcs().end(), b.graph.arcs().begin(),
                                      b.graph.arcs().end());
}

}  // namespace detail

namespace {

using detail::Scored;
using detail::Split;

constexpr int kHardOrderCap = 8;
constexpr int kChunkBits = 12;

// Bitmask adjacency for the fast membership filter.
struct Masks {
  std::uint32_t out[kHardOrderCap] = {};
  std::uint32_t in[kHardOrderCap] = {};
};

Masks base_masks(const Split& s) {
  Masks m;
  for (const auto& a : s.mandatory) {
    m.out[a.tail - 1] |= 1u << (a.head - 1);
    m.in[a.head - 1] |= 1u << (a.tail - 1);
  }
  return m;
}

std::uint32_t closure(const std::uint32_t* next) {
  std::uint32_t seen = 1u;
  std::uint32_t frontier = 1u;
  while (frontier != 0) {
    std::uint32_t grow = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) grow |= next[std::countr_zero(f)];
    frontier = grow & ~seen;
    seen |= grow;
  }
  return seen;
}

struct Chunk {
  std::size_t split = 0;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

struct ChunkResult {
  EnumerationCounts counts;
  double min_q = std::numeric_limits<double>::infinity();
  double next_q = std::numeric_limits<double>::infinity();
  std::vector<Scored> near;
  std::vector<Member> members;  // collect mode only
};

std::vector<Chunk> make_chunks(const std::vector<Split>& splits) {
  std::vector<Chunk> chunks;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    const std::uint64_t total = std::uint64_t{1} << splits[i].optional.size();
    const std::uint64_t step = std::uint64_t{1} << kChunkBits;
    for (std::uint64_t lo = 0; lo < total; lo += step) chunks.push_back({i, lo, std::min(total, lo + step)});
  }
  return chunks;
}

// Keeps `near` within band of min_q and pushes everything else into next_q.
void admit(ChunkResult& r, double q, Member member, double band) {
  if (q < r.min_q) {
    r.min_q = q;
    std::vector<Scored> kept;
    for (auto& s : r.near) {
      if (s.q <= r.min_q + band) {
        kept.push_back(std::move(s));
      } else {
        r.next_q = std::min(r.next_q, s.q);
      }
    }
    r.near = std::move(kept);
  }
  if (q <= r.min_q + band) {
    r.near.push_back({q, std::move(member)});
  } else {
    r.next_q = std::min(r.next_q, q);
  }
}

ChunkResult scan(const EnumerationTask& task, const Split& split, const Chunk& chunk, bool collect) {
  ChunkResult r;
  const int n = task.n;
  const std::uint32_t all = (1u << n) - 1u;
  const Masks base = base_masks(split);
  const SpectralOptions opts{task.tol};
  const double band = 10.0 * task.tol;
  for (std::uint64_t subset = chunk.lo; subset < chunk.hi; ++subset) {
    ++r.counts.subsets;
    Masks m = base;
    for (std::uint64_t s = subset; s != 0; s &= s - 1) {
      const auto& a = split.optional[static_cast<std::size_t>(std::countr_zero(s))];
      m.out[a.tail - 1] |= 1u << (a.head - 1);
      m.in[a.head - 1] |= 1u << (a.tail - 1);
    }
    bool degrees = true;
    for (int v = 0; v < n && degrees; ++v) degrees = m.out[v] != 0 && m.in[v] != 0;
    if (!degrees) continue;
    ++r.counts.degree_feasible;
    if (closure(m.out) != all || closure(m.in) != all) continue;
    ++r.counts.strongly_connected;
    Member member{Digraph(n, detail::arcs_for(split, subset)), split.sides};
    if (collect) {
      r.members.push_back(std::move(member));
      continue;
    }
    const double q = q_index(member.graph, opts).q;
    admit(r, q, std::move(member), band);
  }
  return r;
}

int resolve_workers(int workers) {
#ifdef _OPENMP
  return workers > 0 ? workers : omp_get_max_threads();
#else
  (void)workers;
  return 1;
#endif
}

std::vector<ChunkResult> scan_all(const EnumerationTask& task, const std::vector<Split>& splits, bool collect) {
  const auto chunks = make_chunks(splits);
  std::vector<ChunkResult> results(chunks.size());
  const auto count = static_cast<std::ptrdiff_t>(chunks.size());
  const int workers = resolve_workers(task.workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#else
  (void)workers;
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& c = chunks[static_cast<std::size_t>(i)];
    results[static_cast<std::size_t>(i)] = scan(task, splits[c.split], c, collect);
  }
  return results;
}

void add(EnumerationCounts& into, const EnumerationCounts& from) {
  into.subsets += from.subsets;
  into.degree_feasible += from.degree_feasible;
  into.strongly_connected += from.strongly_connected;
}

// Degree-pair multiset: equal for isomorphic digraphs.
std::vector<std::pair<int, int>> degree_signature(const Digraph& g) {
  std::vector<std::pair<int, int>> sig;
  for (Vertex v = 1; v <= g.order(); ++v) sig.emplace_back(g.out_degree(v), g.in_degree(v));
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Class index of each member, first-seen order.
std::vector<int> isomorphism_classes(const std::vector<Member>& members) {
  std::map<std::pair<std::size_t, std::vector<std::pair<int, int>>>, std::vector<int>> buckets;
  std::vector<int> representative;  // member index per class
  std::vector<int> cls(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& g = members[i].graph;
    auto& bucket = buckets[{g.arc_count(), degree_signature(g)}];
    int found = -1;
    for (int c : bucket) {
      if (are_isomorphic(members[static_cast<std::size_t>(representative[static_cast<std::size_t>(c)])].graph, g,
                         kHardOrderCap)) {
        found = c;
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(representative.size());
      representative.push_back(static_cast<int>(i));
      bucket.push_back(found);
    }
    cls[i] = found;
  }
  return cls;
}

Family predicted_family(const EnumerationTask& t) { return (t.n - t.p - t.q) % 2 == 0 ? Family::b5 : Family::b1; }

}  // namespace

void validate(const EnumerationTask& task) {
  if (task.q < 1 || task.p < task.q || task.p + task.q > task.n) {
    throw InvalidInput("enumeration needs p >= q >= 1 and p+q <= n (got n=" + std::to_string(task.n) +
                       ", p=" + std::to_string(task.p) + ", q=" + std::to_string(task.q) + ")");
  }
  if (task.max_n > kHardOrderCap) {
    throw InvalidInput("enumeration cap cannot exceed " + std::to_string(kHardOrderCap));
  }
  if (task.n > task.max_n) {
    throw InvalidInput("n=" + std::to_string(task.n) + " exceeds the enumeration cap " + std::to_string(task.max_n));
  }
  if (!(task.tol > 0.0)) throw InvalidInput("tolerance must be positive");
}

std::vector<Member> enumerate_Gnpq(const EnumerationTask& task, EnumerationCounts* counts) {
  validate(task);
  const auto splits = detail::make_splits(task, task.dedup);
  auto results = scan_all(task, splits, true);
  EnumerationCounts total;
  total.splits = static_cast<std::int64_t>(splits.size());
  std::vector<Member> members;
  for (auto& r : results) {
    add(total, r.counts);
    std::move(r.members.begin(), r.members.end(), std::back_inserter(members));
  }
  std::sort(members.begin(), members.end(), detail::arc_order);
  if (task.dedup) {
    const auto cls = isomorphism_classes(members);
    std::vector<Member> firsts;
    int seen = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (cls[i] == seen) {
        firsts.push_back(std::move(members[i]));
        ++seen;
      }
    }
    members = std::move(firsts);
  }
  if (counts) *counts = total;
  return members;
}

namespace detail {

ExtremalReport finish_report(const EnumerationTask& task, const EnumerationCounts& counts, std::int64_t members,
                             double min_q, std::vector<Scored> near, double next_q) {
  ExtremalReport report;
  report.task = task;
  report.counts = counts;
  report.members = members;
  report.min_q = min_q;
  report.next_q = std::isinf(next_q) ? std::numeric_limits<double>::quiet_NaN() : next_q;
  std::sort(near.begin(), near.end(), [](const Scored& a, const Scored& b) { return arc_order(a.member, b.member); });
  double hi = min_q;
  for (auto& s : near) {
    hi = std::max(hi, s.q);
    report.minimizers.push_back(std::move(s.member));
  }
  report.minimizer_spread = near.empty() ? 0.0 : hi - min_q;
  const auto cls = isomorphism_classes(report.minimizers);
  report.minimizer_classes = cls.empty() ? 0 : 1 + *std::max_element(cls.begin(), cls.end());
  report.unique = report.minimizer_classes == 1;

  report.predicted = predicted_family(task);
  const auto predicted = build(FamilySpec{report.predicted, task.n, task.p, task.q});
  report.predicted_q = q_index(predicted.graph, SpectralOptions{task.tol}).q;
  report.predicted_attains = std::any_of(report.minimizers.begin(), report.minimizers.end(), [&](const Member& m) {
    return are_isomorphic(m.graph, predicted.graph, kHardOrderCap);
  });
  return report;
}

}  // namespace detail

void validate_certifiable(const EnumerationTask& task) {
  validate(task);
  if (task.p + task.q > task.n - 1) {
    throw InvalidInput("certification needs p+q <= n-1 so that a family member exists (got n=" + std::to_string(task.n) +
                       ", p=" + std::to_string(task.p) + ", q=" + std::to_string(task.q) + ")");
  }
}

ExtremalReport certify_minimum(const EnumerationTask& task) {
  validate_certifiable(task);
  const auto start = std::chrono::steady_clock::now();
  const auto splits = detail::make_splits(task, task.dedup);
  auto results = scan_all(task, splits, false);

  // Merge in chunk order; every step is a min or a band filter, so the
  // outcome does not depend on which thread produced which chunk.
  ChunkResult merged;
  const double band = 10.0 * task.tol;
  for (auto& r : results) {
    add(merged.counts, r.counts);
    merged.next_q = std::min(merged.next_q, r.next_q);
    for (auto& s : r.near) admit(merged, s.q, std::move(s.member), band);
  }
  merged.counts.splits = static_cast<std::int64_t>(splits.size());
  auto report = detail::finish_report(task, merged.counts, merged.counts.strongly_connected, merged.min_q,
                                      std::move(merged.near), merged.next_q);
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Certificate to_certificate(const ExtremalReport& r, const VerifyConfig& cfg) {
  const auto& t = r.task;
  Certificate c;
  c.claim = r.predicted == Family::b5 ? "thm7" : "thm8";
  c.params = json{{"n", t.n}, {"p", t.p}, {"q", t.q}, {"dedup", t.dedup}};
  c.tolerance = t.tol;
  c.band = cfg.band_multiplier * t.tol;
  c.values["min_q"] = r.min_q;
  c.values["next_q"] = r.next_q;
  c.values["predicted_family"] = family_name(r.predicted);
  c.values["predicted_q"] = r.predicted_q;
  c.values["labeled_minimizers"] = r.minimizers.size();
  c.values["minimizer_classes"] = r.minimizer_classes;
  c.values["strongly_connected"] = r.counts.strongly_connected;

  if (r.minimizers.empty()) {
    c.notes.push_back("enumeration is empty");
    c.settle();
    return c;
  }
  const std::string name(family_name(r.predicted));
  c.comparisons.push_back(compare("q(" + name + ") = min q", Relation::equal, r.predicted_q, r.min_q, c.band));
  c.comparisons.push_back(compare(name + " is a minimizer up to isomorphism", Relation::equal,
                                  r.predicted_attains ? 1.0 : 0.0, 1.0, 0.0));
  c.comparisons.push_back(compare("minimizers form one isomorphism class", Relation::equal,
                                  static_cast<double>(r.minimizer_classes), 1.0, 0.0));
  if (!std::isnan(r.next_q)) {
    c.comparisons.push_back(compare("min q < next q", Relation::less, r.min_q, r.next_q, c.band));
  }

  // Independent value routes: dense characteristic polynomial, and f for B1.
  const double dense = dense_q_index(r.minimizers.front().graph);
  c.values["min_q_dense"] = dense;
  c.comparisons.push_back(compare("|min q - dense root|", Relation::within, r.min_q, dense, cfg.cross_tol));
  if (r.predicted == Family::b1 && t.p >= 2) {
    const double root = largest_real_root({PolyKind::f, t.n, t.p, t.q}).root;
    c.values["root_f"] = root;
    c.comparisons.push_back(compare("|min q - root(f)|", Relation::within, r.min_q, root, cfg.cross_tol));
  } else if (r.predicted == Family::b1) {
    c.notes.push_back("root(f) route skipped: B1 is degenerate when p = 1");
  }

  c.settle();
  if (c.verdict == Verdict::fail) {
    json counterexamples = json::array();
    for (const auto& m : r.minimizers) counterexamples.push_back(digraph_to_json(m.graph, m.sides));
    c.values["counterexamples"] = std::move(counterexamples);
  }
  return c;
}

json report_to_json(const ExtremalReport& r, const VerifyConfig& cfg, bool with_runtime) {
  json minimizers = json::array();
  for (const auto& m : r.minimizers) minimizers.push_back(digraph_to_json(m.graph, m.sides));
  const auto predicted = build(FamilySpec{r.predicted, r.task.n, r.task.p, r.task.q});
  json doc = {
      {"task", {{"n", r.task.n}, {"p", r.task.p}, {"q", r.task.q}, {"tol", r.task.tol}, {"dedup", r.task.dedup}}},
      {"counts",
       {{"splits", r.counts.splits},
        {"subsets", r.counts.subsets},
        {"degree_feasible", r.counts.degree_feasible},
        {"strongly_connected", r.counts.strongly_connected}}},
      {"min_q", r.min_q},
      {"next_q", r.next_q},
      {"minimizer", minimizers.empty() ? json(nullptr) : minimizers.front()},
      {"minimizers", minimizers},
      {"minimizer_spread", r.minimizer_spread},
      {"minimizer_classes", r.minimizer_classes},
      {"unique", r.unique},
      {"predicted",
       {{"family", family_name(r.predicted)},
        {"q", r.predicted_q},
        {"attains", r.predicted_attains},
        {"digraph", digraph_to_json(predicted.graph, predicted.sides)}}},
      {"certificate", to_json(to_certificate(r, cfg))}};
  if (with_runtime) doc["runtime_seconds"] = r.runtime_seconds;
  return doc;
}

}  // namespace qindex
