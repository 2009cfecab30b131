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

#include "qindex/charpoly.hpp"

#include <cmath>
#include <string>

#include "qindex/error.hpp"
#include "qindex/roots.hpp"

namespace qindex {

PolyKind parse_poly_kind(std::string_view name) {
  if (name == "f") return PolyKind::f;
  if (name == "g") return PolyKind::g;
  throw InvalidInput("unknown polynomial kind '" + std::string(name) + "' (expected f or g)");
}

void validate(const CharPolySpec& s) {
  if (s.q < 1 || s.p < s.q || s.p + s.q > s.n - 1) {
    throw InvalidInput("polynomial parameters need p >= q >= 1 and p+q <= n-1 (got n=" + std::to_string(s.n) +
                       ", p=" + std::to_string(s.p) + ", q=" + std::to_string(s.q) + ")");
  }
}

double eval_poly(const CharPolySpec& s, double x) {
  // For g the roles of p and q swap.
  const double a = s.kind == PolyKind::f ? s.p : s.q;
  const double b = s.kind == PolyKind::f ? s.q : s.p;
  const double cubic = ((x - (a + 2 * b + 1)) * x + (b * b + a * b + a + b)) * x - b;
  return std::pow(x - 1.0, s.n - s.p - s.q) * cubic - b;
}

PolyRoot largest_real_root(const CharPolySpec& s, double tol) {
  validate(s);
  if (!(tol > 0.0)) throw InvalidInput("root tolerance must be positive");
  const double lo = s.p + s.q;
  const double hi = 2.0 * s.n;
  auto scan = largest_root_by_scan([&](double x) { return eval_poly(s, x); }, lo, hi, tol);
  if (!scan) {
    throw NonConvergence("polynomial has no sign change on [" + std::to_string(s.p + s.q) + ", " +
                         std::to_string(2 * s.n) + "]");
  }
  return PolyRoot{scan->root, scan->lower, scan->upper, scan->sign_changes, scan->bisection_steps};
}

}  // namespace qindex
