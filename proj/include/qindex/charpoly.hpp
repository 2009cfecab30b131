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

#include <string_view>

namespace qindex {

// Closed-form polynomials whose largest real roots are q(B1) and q(B2):
//
//   f(x) = (x-1)^(n-p-q) [x^3 - (p+2q+1) x^2 + (q^2+pq+p+q) x - q] - q
//   g(x) = (x-1)^(n-p-q) [x^3 - (q+2p+1) x^2 + (p^2+pq+p+q) x - p] - p
//
// g is f with p and q exchanged. Evaluation keeps the factored form; the
// expanded monomial basis is badly conditioned once n-p-q grows.

enum class PolyKind { f, g };

PolyKind parse_poly_kind(std::string_view name);  // "f" or "g"

struct CharPolySpec {
  PolyKind kind = PolyKind::f;
  int n = 0;
  int p = 0;
  int q = 0;
};

/// p >= q >= 1 and p+q <= n-1, else InvalidInput.
void validate(const CharPolySpec& spec);

double eval_poly(const CharPolySpec& spec, double x);

struct PolyRoot {
  double root = 0.0;
  double lower = 0.0;  // bisection bracket around root
  double upper = 0.0;
  int sign_changes = 0;  // seen while scanning [p+q, 2n]
  int bisection_steps = 0;
};

/// Largest real root on [p+q, 2n]: scan down from 2n, bisect the first sign
/// change to width <= tol. Throws NonConvergence when the bracket shows no
/// sign change, InvalidInput when tol <= 0.
PolyRoot largest_real_root(const CharPolySpec& spec, double tol = 1e-12);

}  // namespace qindex
