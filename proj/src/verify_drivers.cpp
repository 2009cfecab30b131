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

#include <algorithm>
#include <array>
#include <charconv>
#include <exception>
#include <string>

#include "qindex/error.hpp"
#include "qindex/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qindex {
namespace {

constexpr std::array<std::string_view, 8> kOddClaims = {"thm1",           "thm2",   "thm3",   "thm5",
                                                        "lemma6",         "perron", "lemma4", "charpoly-cross"};
constexpr std::array<std::string_view, 3> kEvenClaims = {"thm4", "thm6", "chain"};

bool contains(auto const& list, std::string_view claim) {
  return std::find(list.begin(), list.end(), claim) != list.end();
}

int parse_int(std::string_view key, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidInput("grid key '" + std::string(key) + "' needs an integer, got '" + std::string(text) + "'");
  }
  return value;
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int pick(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

Arc random_arc(std::mt19937_64& rng, const Digraph& g) {
  return g.arcs()[static_cast<std::size_t>(pick(rng, static_cast<int>(g.arc_count())))];
}

}  // namespace

Grid parse_grid(std::string_view text) {
  Grid grid;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidInput("grid entry '" + std::string(item) + "' is not key=value");
    const auto key = item.substr(0, eq);
    const int value = parse_int(key, item.substr(eq + 1));
    if (key == "nmin") {
      grid.n_min = value;
    } else if (key == "nmax") {
      grid.n_max = value;
    } else if (key == "pmax") {
      grid.p_max = value;
    } else if (key == "qmax") {
      grid.q_max = value;
    } else {
      throw InvalidInput("unknown grid key '" + std::string(key) + "' (expected nmin, nmax, pmax, qmax)");
    }
  }
  if (grid.n_min < 3 || grid.n_max < grid.n_min || grid.p_max < 1 || grid.q_max < 1) {
    throw InvalidInput("grid needs 3 <= nmin <= nmax and pmax, qmax >= 1");
  }
  return grid;
}

bool is_family_claim(std::string_view claim) { return contains(kOddClaims, claim) || contains(kEvenClaims, claim); }

std::vector<Params> grid_points(std::string_view claim, const Grid& grid) {
  if (!is_family_claim(claim)) throw InvalidInput("claim '" + std::string(claim) + "' has no parameter grid");
  const int parity = contains(kOddClaims, claim) ? 1 : 0;
  std::vector<Params> points;
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    for (int p = 1; p <= grid.p_max; ++p) {
      for (int q = 1; q <= std::min(p, grid.q_max); ++q) {
        const int k = n - p - q;
        // Even claims need a path of at least two vertices.
        if (k < 1 || k % 2 != parity || (parity == 0 && k < 2)) continue;
        points.push_back({n, p, q});
      }
    }
  }
  return points;
}

Certificate run_single(std::string_view claim, const Params& at, const VerifyConfig& cfg) {
  const auto [n, p, q] = at;
  if (claim == "thm1") return check_theorem1(n, p, q, cfg);
  if (claim == "thm2") return check_theorem2(n, p, q, cfg);
  if (claim == "thm3") return check_theorem3(n, p, q, cfg);
  if (claim == "thm4") return check_theorem4(n, p, q, cfg);
  if (claim == "thm5") return check_theorem5(n, p, q, cfg);
  if (claim == "thm6") return check_theorem6(n, p, q, cfg);
  if (claim == "chain") return check_chain(n, p, q, cfg);
  if (claim == "lemma6") return check_lemma6(n, p, q, cfg);
  if (claim == "charpoly-cross") return check_charpoly_cross(n, p, q, cfg);
  if (claim == "perron") return check_perron_structure(n, p, q, Family::b1, cfg);
  if (claim == "lemma4") return check_lemma4_family({Family::b1, n, p, q}, cfg);
  throw InvalidInput("claim '" + std::string(claim) + "' is not a family claim");
}

std::vector<Certificate> run_grid_serial(std::string_view claim, const Grid& grid, const VerifyConfig& cfg) {
  std::vector<Certificate> out;
  for (const auto& at : grid_points(claim, grid)) out.push_back(run_single(claim, at, cfg));
  return out;
}

std::vector<Certificate> run_grid(std::string_view claim, const Grid& grid, const VerifyConfig& cfg, int workers) {
  const auto points = grid_points(claim, grid);
  std::vector<Certificate> out(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, workers))
#else
  (void)workers;
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = run_single(claim, points[static_cast<std::size_t>(i)], cfg);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  // First failure in grid order, so the error does not depend on scheduling.
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Digraph random_strongly_connected(std::mt19937_64& rng, int min_order, int max_order, bool allow_cycle) {
  if (min_order < 2 || max_order < min_order) throw InvalidInput("random digraph orders need 2 <= min <= max");
  for (;;) {
    const int n = min_order + pick(rng, max_order - min_order + 1);
    const double density = 0.2 + 0.8 * unit(rng);
    std::vector<Arc> arcs;
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = 1; j <= n; ++j) {
        if (i != j && unit(rng) < density) arcs.push_back({i, j});
      }
    }
    Digraph g(n, std::move(arcs));
    if (!is_strongly_connected(g)) continue;
    if (!allow_cycle && is_directed_cycle(g)) continue;
    return g;
  }
}

std::vector<Certificate> run_lemma_samples(std::string_view claim, int count, std::uint64_t seed, int max_order,
                                           const VerifyConfig& cfg) {
  if (claim != "lemma1" && claim != "lemma3" && claim != "lemma5") {
    throw InvalidInput("random samples cover lemma1, lemma3 and lemma5, not '" + std::string(claim) + "'");
  }
  if (count < 0) throw InvalidInput("sample count must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<Certificate> out;
  // Bound redraws so a hypothesis that can never hold does not spin forever.
  const long budget = 1000L * std::max(count, 1);
  for (long attempt = 0; static_cast<int>(out.size()) < count && attempt < budget; ++attempt) {
    if (claim == "lemma5") {
      const auto g = random_strongly_connected(rng, 3, max_order, false);
      out.push_back(check_lemma5(g, random_arc(rng, g), cfg));
      continue;
    }
    if (claim == "lemma3") {
      const auto g = random_strongly_connected(rng, 2, max_order, true);
      out.push_back(check_lemma3(g, random_arc(rng, g), cfg));
      continue;
    }
    const auto g = random_strongly_connected(rng, 3, max_order, true);
    const auto [u, v] = random_arc(rng, g);
    const Vertex w = 1 + pick(rng, g.order());
    auto c = check_lemma1(g, u, v, w, cfg);
    if (c.verdict != Verdict::not_applicable) out.push_back(std::move(c));
  }
  if (static_cast<int>(out.size()) < count) {
    throw InvalidInput("could not draw " + std::to_string(count) + " samples satisfying the " + std::string(claim) +
                       " hypotheses");
  }
  return out;
}

}  // namespace qindex
