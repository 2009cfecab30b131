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

#include <cmath>
#include <optional>

namespace qindex {

struct RootScan {
  double root = 0.0;
  double lower = 0.0;  // final bisection bracket
  double upper = 0.0;
  int sign_changes = 0;  // over the whole scanned interval
  int bisection_steps = 0;
};

inline int sign_of(double v) { return (v > 0) - (v < 0); }

/// Largest root of `f` in [lo, hi]: walk down from `hi` in `steps` equal
/// cells, bisect the first cell whose endpoint signs differ (or that hits an
/// exact zero) to width <= tol. Keeps scanning to count every sign change.
/// Empty when no cell changes sign.
template <class F>
std::optional<RootScan> largest_root_by_scan(F&& f, double lo, double hi, double tol, int steps = 4096) {
  const double h = (hi - lo) / steps;
  RootScan out;
  bool found = false;
  double right = hi;
  double f_right = f(right);
  if (f_right == 0.0) {
    out.root = out.lower = out.upper = right;
    found = true;
  }
  for (int k = steps - 1; k >= 0; --k) {
    const double left = (k == 0) ? lo : lo + h * k;
    const double f_left = f(left);
    const bool change = sign_of(f_left) * sign_of(f_right) < 0 || (f_left == 0.0 && f_right != 0.0);
    if (change) {
      ++out.sign_changes;
      if (!found) {
        found = true;
        double a = left, b = right;
        double fa = f_left;
        while (b - a > tol && out.bisection_steps < 400) {
          const double m = a + (b - a) / 2;
          if (m <= a || m >= b) break;
          const double fm = f(m);
          ++out.bisection_steps;
          if (fm == 0.0) {
            a = b = m;
            break;
          }
          if (sign_of(fm) == sign_of(fa)) {
            a = m;
            fa = fm;
          } else {
            b = m;
          }
        }
        out.lower = a;
        out.upper = b;
        out.root = a + (b - a) / 2;
      }
    }
    right = left;
    f_right = f_left;
  }
  if (!found) return std::nullopt;
  return out;
}

}  // namespace qindex
