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

// Independent oracles shared by the test binaries. None of them call into
// the routine they are used to check.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qindex/digraph.hpp"

namespace qindex::testing {

/// Largest real part among the eigenvalues of D + A, from a dense
/// general eigensolver.
inline double eigen_q_index(const Digraph& g) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Arc& a : g.arcs()) {
    m(a.tail - 1, a.head - 1) = 1.0;
    m(a.tail - 1, a.tail - 1) += 1.0;
  }
  const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(m, false).eigenvalues();
  double best = -1e300;
  for (int i = 0; i < n; ++i) best = std::max(best, ev[i].real());
  return best;
}

/// Tries all n! relabelings.
inline bool brute_force_isomorphic(const Digraph& g, const Digraph& h) {
  if (g.order() != h.order() || g.arc_count() != h.arc_count()) return false;
  std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (g.relabeled(perm) == h) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
  return perm;
}

/// Any digraph, each arc kept with probability `density`.
inline Digraph random_digraph(std::mt19937_64& rng, int n, double density) {
  std::vector<Arc> arcs;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = 1; j <= n; ++j) {
      if (i != j && static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) arcs.push_back({i, j});
    }
  }
  return Digraph(n, std::move(arcs));
}

/// Reachability by repeated squaring of the boolean adjacency matrix.
inline bool closure_strongly_connected(const Digraph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<std::vector<bool>> r(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
  for (const Arc& a : g.arcs()) r[static_cast<std::size_t>(a.tail - 1)][static_cast<std::size_t>(a.head - 1)] = true;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
          r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        }
      }
    }
  }
  for (const auto& row : r) {
    if (std::find(row.begin(), row.end(), false) != row.end()) return false;
  }
  return true;
}

}  // namespace qindex::testing
