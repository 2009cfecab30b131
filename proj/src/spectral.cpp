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

#include "qindex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qindex/error.hpp"
#include "qindex/roots.hpp"

namespace qindex {

void QMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  const auto n = static_cast<std::size_t>(n_);
  for (std::size_t i = 0; i < n; ++i) {
    const double* r = entries_.data() + i * n;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
}

QMatrix signless_laplacian(const Digraph& g) {
  QMatrix m(g.order());
  for (const Arc& a : g.arcs()) {
    m.at(a.tail, a.head) = 1.0;
    m.at(a.tail, a.tail) += 1.0;
  }
  return m;
}

QMatrix principal_submatrix(const QMatrix& m, std::span<const Vertex> vertices) {
  QMatrix sub(static_cast<int>(vertices.size()));
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    for (std::size_t c = 0; c < vertices.size(); ++c) {
      sub.at(static_cast<Vertex>(r + 1), static_cast<Vertex>(c + 1)) = m.at(vertices[r], vertices[c]);
    }
  }
  return sub;
}

Enclosure collatz_wielandt_bounds(const QMatrix& m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.order()) throw InvalidInput("vector length does not match matrix order");
  if (x.empty()) throw InvalidInput("empty vector");
  for (double v : x) {
    if (!(v > 0.0)) throw InvalidInput("Collatz-Wielandt bounds need a strictly positive vector");
  }
  std::vector<double> y(x.size());
  m.multiply(x, y);
  Enclosure e{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ratio = y[i] / x[i];
    e.lower = std::min(e.lower, ratio);
    e.upper = std::max(e.upper, ratio);
  }
  return e;
}

SpectralResult power_iteration(const QMatrix& m, const SpectralOptions& opts) {
  if (!(opts.tol > 0.0)) throw InvalidInput("tolerance must be positive");
  const auto n = static_cast<std::size_t>(m.order());
  if (n == 0) throw InvalidInput("empty matrix");

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  SpectralResult out;
  for (long it = 1; it <= opts.max_iter; ++it) {
    m.multiply(x, y);
    double lower = std::numeric_limits<double>::infinity();
    double upper = -lower;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(x[i] > 0.0)) {
        throw NonConvergence("Perron iterate lost positivity at component " + std::to_string(i + 1));
      }
      const double ratio = y[i] / x[i];
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    if (upper - lower <= opts.tol) {
      out.q = lower + (upper - lower) / 2;
      out.lower = lower;
      out.upper = upper;
      out.iterations = it;
      out.residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) out.residual = std::max(out.residual, std::abs(y[i] - out.q * x[i]));
      out.x = std::move(x);
      return out;
    }
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    if (!(norm > 0.0)) throw NonConvergence("power iteration collapsed to the zero vector");
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw NonConvergence("Collatz-Wielandt bracket still wider than " + format_double(opts.tol) + " after " +
                       std::to_string(opts.max_iter) + " iterations");
}

SpectralResult q_index(const Digraph& g, const SpectralOptions& opts) {
  if (!is_strongly_connected(g)) {
    throw NotStronglyConnected("Q-index via power iteration needs a strongly connected digraph");
  }
  if (g.order() == 1) {
    // K_1: Q = [0]; the Perron vector is (1).
    return SpectralResult{0.0, {1.0}, 0.0, 0, 0.0, 0.0};
  }
  return power_iteration(signless_laplacian(g), opts);
}

std::vector<double> perron_vector(const Digraph& g, const SpectralOptions& opts) { return q_index(g, opts).x; }

double q_index_by_components(const Digraph& g, const SpectralOptions& opts) {
  const QMatrix m = signless_laplacian(g);
  double best = 0.0;
  for (const auto& component : strongly_connected_components(g)) {
    if (component.size() == 1) {
      best = std::max(best, m.at(component.front(), component.front()));
      continue;
    }
    best = std::max(best, power_iteration(principal_submatrix(m, component), opts).q);
  }
  return best;
}

std::vector<std::int64_t> characteristic_polynomial(const QMatrix& m) {
  const int n = m.order();
  if (n > kCharpolyOrderCap) {
    throw InvalidInput("characteristic polynomial is capped at order " + std::to_string(kCharpolyOrderCap));
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> a(un * un);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double v = m.at(i, j);
      if (v != std::round(v)) throw InvalidInput("characteristic polynomial needs an integer matrix");
      a[static_cast<std::size_t>(i - 1) * un + static_cast<std::size_t>(j - 1)] = static_cast<std::int64_t>(v);
    }
  }
  auto mul = [](std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(x, y, &r)) throw InvalidInput("characteristic polynomial overflowed 64 bits");
    return r;
  };
  auto add = [](std::int64_t x, std::int64_t y) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(x, y, &r)) throw InvalidInput("characteristic polynomial overflowed 64 bits");
    return r;
  };

  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<std::int64_t> c(un + 1, 0);
  c[un] = 1;
  std::vector<std::int64_t> prev(un * un, 0);
  std::vector<std::int64_t> cur(un * un, 0);
  std::vector<std::int64_t> am(un * un, 0);
  for (std::size_t k = 1; k <= un; ++k) {
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = 0; j < un; ++j) {
        std::int64_t acc = 0;
        for (std::size_t l = 0; l < un; ++l) acc = add(acc, mul(a[i * un + l], prev[l * un + j]));
        cur[i * un + j] = acc;
      }
      cur[i * un + i] = add(cur[i * un + i], c[un - k + 1]);
    }
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < un; ++i) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < un; ++l) acc = add(acc, mul(a[i * un + l], cur[l * un + i]));
      trace = add(trace, acc);
    }
    if (trace % static_cast<std::int64_t>(k) != 0) throw InvalidInput("Faddeev-LeVerrier lost integrality");
    c[un - k] = -trace / static_cast<std::int64_t>(k);
    std::swap(prev, cur);
  }
  return c;
}

double dense_q_index(const Digraph& g, double tol) {
  if (!is_strongly_connected(g)) throw NotStronglyConnected("dense Q-index oracle needs a strongly connected digraph");
  if (g.order() == 1) return 0.0;
  const QMatrix m = signless_laplacian(g);
  const auto coeffs = characteristic_polynomial(m);
  auto eval = [&](double x) {
    long double acc = 0.0L;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
    return static_cast<double>(acc);
  };
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    const double row_sum = 2.0 * g.out_degree(v);
    lo = std::min(lo, row_sum);
    hi = std::max(hi, row_sum);
  }
  auto scan = largest_root_by_scan(eval, lo - 0.5, hi + 0.5, tol, 20000);
  if (!scan) throw NonConvergence("characteristic polynomial shows no sign change near the row-sum bracket");
  return scan->root;
}

json to_json(const SpectralResult& r) {
  return json{{"q", r.q}, {"x", r.x}, {"residual", r.residual}, {"iterations", r.iterations}};
}

}  // namespace qindex
