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
#include <span>
#include <vector>

#include "qindex/digraph.hpp"
#include "qindex/json_io.hpp"

namespace qindex {

/// Dense signless Laplacian Q = D + A, D the outdegree diagonal.
/// Indexed by vertex label (1-based) through at().
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(int order) : n_(order), entries_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {}

  int order() const { return n_; }
  double at(Vertex i, Vertex j) const { return entries_[offset(i, j)]; }
  double& at(Vertex i, Vertex j) { return entries_[offset(i, j)]; }
  std::span<const double> row(Vertex i) const {
    return std::span<const double>(entries_).subspan(offset(i, 1), static_cast<std::size_t>(n_));
  }

  /// y = Q x, both of length n.
  void multiply(std::span<const double> x, std::span<double> y) const;

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t offset(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }

  int n_ = 0;
  std::vector<double> entries_;
};

struct SpectralOptions {
  double tol = 1e-10;
  long max_iter = 1'000'000;
};

struct SpectralResult {
  double q = 0.0;
  std::vector<double> x;  // positive, unit Euclidean norm
  double residual = 0.0;  // max_i |(Qx)_i - q x_i|
  long iterations = 0;
  double lower = 0.0;  // Collatz-Wielandt enclosure of the spectral radius
  double upper = 0.0;
};

struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
};

QMatrix signless_laplacian(const Digraph& g);

/// Principal submatrix on `vertices`, relabeled 1..k in the given order.
QMatrix principal_submatrix(const QMatrix& m, std::span<const Vertex> vertices);

/// min_i (Qx)_i / x_i and max_i (Qx)_i / x_i. For nonnegative irreducible Q
/// the spectral radius lies between them. Throws InvalidInput unless x > 0.
Enclosure collatz_wielandt_bounds(const QMatrix& m, std::span<const double> x);

/// Power iteration from the all-ones vector, stopped once the Collatz-Wielandt
/// bracket is at most opts.tol wide; q is the bracket midpoint. Assumes `m` is
/// irreducible with positive diagonal (primitive). Throws NonConvergence.
SpectralResult power_iteration(const QMatrix& m, const SpectralOptions& opts = {});

/// Q-index and Perron vector. Throws NotStronglyConnected.
SpectralResult q_index(const Digraph& g, const SpectralOptions& opts = {});

std::vector<double> perron_vector(const Digraph& g, const SpectralOptions& opts = {});

/// Spectral radius of Q(g) for any digraph, as the maximum over the diagonal
/// blocks of Q indexed by the strongly connected components. Those blocks
/// keep the full outdegree on the diagonal, so arcs leaving a component still
/// count; this is what makes the max rule exact for Q.
double q_index_by_components(const Digraph& g, const SpectralOptions& opts = {});

/// Largest order accepted by the exact characteristic polynomial.
inline constexpr int kCharpolyOrderCap = 12;

/// Coefficients c[0..n] of det(xI - Q), c[n] = 1, computed by Faddeev-LeVerrier
/// in exact integer arithmetic (Q has integer entries).
std::vector<std::int64_t> characteristic_polynomial(const QMatrix& m);

/// Q-index as the largest real root of det(xI - Q(g)); an eigen-free cross
/// check for power iteration. Strongly connected g only (the root is then
/// simple, so it shows up as a sign change).
double dense_q_index(const Digraph& g, double tol = 1e-13);

/// {"iterations","q","residual","x"}; floats at 17 significant digits via dump_json.
json to_json(const SpectralResult& r);

}  // namespace qindex
