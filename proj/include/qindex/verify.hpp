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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qindex/digraph.hpp"
#include "qindex/families.hpp"
#include "qindex/json_io.hpp"
#include "qindex/spectral.hpp"

namespace qindex {

struct VerifyConfig {
  SpectralOptions spectral;
  /// Strict inequalities need a margin above band(); equalities hold within it.
  double band_multiplier = 10.0;
  /// Eigen-equation residuals on the Perron vector.
  double residual_threshold = 1e-8;
  /// Spectral route vs polynomial route.
  double cross_tol = 1e-7;
  /// Subdivision may not raise q by more than this.
  double subdivision_tol = 1e-8;

  double band() const { return band_multiplier * spectral.tol; }
};

enum class Verdict { pass, fail, not_applicable };

std::string_view verdict_name(Verdict v);

enum class Relation {
  less,           // lhs < rhs by more than `required`
  less_equal,     // lhs <= rhs + required
  equal,          // |lhs - rhs| <= required
  within,         // |lhs - rhs| <= required, for cross-method agreement
  at_most,        // lhs <= rhs, a plain threshold
};

std::string_view relation_symbol(Relation r);

struct Comparison {
  std::string name;
  Relation relation = Relation::less;
  double lhs = 0.0;
  double rhs = 0.0;
  double required = 0.0;
  /// Distance inside the requirement; ok iff slack > 0 for `less`, >= 0 otherwise.
  double slack = 0.0;
  bool ok = false;
};

Comparison compare(std::string name, Relation relation, double lhs, double rhs, double required);

struct Certificate {
  std::string claim;
  json params = json::object();
  json values = json::object();
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::not_applicable;
  double tolerance = 0.0;
  double band = 0.0;
  std::optional<std::string> timestamp;

  /// Smallest slack over the comparisons, NaN when there are none.
  double margin() const;
  /// pass iff every comparison holds; not_applicable when none were made.
  void settle();
};

json to_json(const Certificate& c);
std::string to_jsonl(const std::vector<Certificate>& certs);
std::string csv_header();
std::string to_csv_row(const Certificate& c);
std::string to_csv(const std::vector<Certificate>& certs);

// ---- Family theorems. Shape and parity violations throw InvalidInput. ----

/// q(B1) <= q(B2), equality iff p = q; spectral route and polynomial route.
Certificate check_theorem1(int n, int p, int q, const VerifyConfig& cfg = {});
/// q(B3) > q(B1), with x_1 > x_p on B1.
Certificate check_theorem2(int n, int p, int q, const VerifyConfig& cfg = {});
/// q(B4) > q(B2), with x_{p+1} > x_{p+q} on B2.
Certificate check_theorem3(int n, int p, int q, const VerifyConfig& cfg = {});
/// q(B5) <= q(B6), equality iff p = q.
Certificate check_theorem4(int n, int p, int q, const VerifyConfig& cfg = {});
/// Stated form q(B1_n) < q(B5_{n-1}) and same-order form
/// q(B1_n) < q(B1_n - (v_n,v_p) + (v_n,v_{p+1})), recorded separately.
Certificate check_theorem5(int n, int p, int q, const VerifyConfig& cfg = {});
/// q(B5_n) <= q(B1_{n-1}) plus the component step through B5*.
Certificate check_theorem6(int n, int p, int q, const VerifyConfig& cfg = {});
/// q(B5_n) <= q(B1_{n-1}) <= q(B2_{n-1}) <= q(B4_{n-1}) (last link when q >= 2).
Certificate check_chain(int n, int p, int q, const VerifyConfig& cfg = {});
/// x_1 > x_p and x_{p+1} > x_p on B1.
Certificate check_lemma6(int n, int p, int q, const VerifyConfig& cfg = {});
/// |q(B1) - root(f)| and |q(B2) - root(g)| within cfg.cross_tol.
Certificate check_charpoly_cross(int n, int p, int q, const VerifyConfig& cfg = {});
/// Equal-entry groups and eigen-equation residuals of the Perron vector.
Certificate check_perron_structure(int n, int p, int q, Family variant, const VerifyConfig& cfg = {});

// ---- Single-digraph lemmas. Hypothesis violations give not_applicable. ----

/// Perron entries strictly increase along path[1..k-1].
Certificate check_lemma4(const Digraph& g, const std::vector<Vertex>& path, const VerifyConfig& cfg = {});
/// check_lemma4 along the attached path of a B1, B2, B5 or B6 member.
Certificate check_lemma4_family(const FamilySpec& spec, const VerifyConfig& cfg = {});
/// Rotation (u,v) -> (u,w) with x_w >= x_v never lowers q.
Certificate check_lemma1(const Digraph& g, Vertex u, Vertex v, Vertex w, const VerifyConfig& cfg = {});
/// Deleting an arc of a strongly connected digraph strictly lowers q.
Certificate check_lemma3(const Digraph& g, Arc removed, const VerifyConfig& cfg = {});
/// Subdividing an arc of a strongly connected non-cycle never raises q.
Certificate check_lemma5(const Digraph& g, Arc subdivided, const VerifyConfig& cfg = {});

// ---- Drivers ----

/// Parameter grid for batch verification: n_min <= n <= n_max,
/// 1 <= q <= p <= p_max, q <= q_max, p+q <= n-1.
struct Grid {
  int n_min = 3;
  int n_max = 16;
  int p_max = 5;
  int q_max = 5;
};

/// "nmax=12,pmax=4" style; unknown keys throw InvalidInput.
Grid parse_grid(std::string_view text);

struct Params {
  int n = 0;
  int p = 0;
  int q = 0;
};

/// Grid points where `claim` is parity-valid, in (n, p, q) order.
std::vector<Params> grid_points(std::string_view claim, const Grid& grid);

/// Claims accepted by run_single/run_grid.
bool is_family_claim(std::string_view claim);

Certificate run_single(std::string_view claim, const Params& at, const VerifyConfig& cfg);

/// Runs `claim` on every valid grid point with up to `workers` OpenMP
/// threads. Output order is the grid order regardless of scheduling.
std::vector<Certificate> run_grid(std::string_view claim, const Grid& grid, const VerifyConfig& cfg, int workers);

/// Serial reference for run_grid.
std::vector<Certificate> run_grid_serial(std::string_view claim, const Grid& grid, const VerifyConfig& cfg);

/// Random strongly connected digraph on [min_order, max_order] vertices by
/// rejection from a random arc density. Deterministic for a given engine
/// state (no std distributions, whose output is implementation-defined).
Digraph random_strongly_connected(std::mt19937_64& rng, int min_order, int max_order, bool allow_cycle = true);

/// `count` samples of lemma1, lemma3 or lemma5 on random strongly connected
/// digraphs of order <= max_order. Samples whose hypotheses fail are redrawn.
std::vector<Certificate> run_lemma_samples(std::string_view claim, int count, std::uint64_t seed, int max_order,
                                           const VerifyConfig& cfg);

}  // namespace qindex
