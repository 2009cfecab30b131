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

#include "qindex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qindex/charpoly.hpp"
#include "qindex/error.hpp"

namespace qindex {
namespace {

Certificate start(std::string claim, json params, const VerifyConfig& cfg) {
  Certificate c;
  c.claim = std::move(claim);
  c.params = std::move(params);
  c.tolerance = cfg.spectral.tol;
  c.band = cfg.band();
  return c;
}

json npq(int n, int p, int q) { return json{{"n", n}, {"p", p}, {"q", q}}; }

BuiltDigraph member(Family f, int n, int p, int q) { return build(FamilySpec{f, n, p, q}); }

// Perron entry of vertex v.
double entry(const SpectralResult& r, Vertex v) { return r.x[static_cast<std::size_t>(v - 1)]; }

// Equal-or-strict comparison of two Q-indices depending on p = q.
Comparison ordered(const std::string& lhs_name, const std::string& rhs_name, double lhs, double rhs, bool equal,
                   double band) {
  if (equal) return compare(lhs_name + " = " + rhs_name, Relation::equal, lhs, rhs, band);
  return compare(lhs_name + " < " + rhs_name, Relation::less, lhs, rhs, band);
}

void add_residual(Certificate& c, const std::string& name, double residual, const VerifyConfig& cfg) {
  c.comparisons.push_back(compare(name, Relation::at_most, std::abs(residual), cfg.residual_threshold, cfg.residual_threshold));
}

void add_group(Certificate& c, const std::string& name, const SpectralResult& r, Vertex first, Vertex last,
               const VerifyConfig& cfg) {
  for (Vertex v = first + 1; v <= last; ++v) {
    c.comparisons.push_back(compare(name + ": x_" + std::to_string(v) + " = x_" + std::to_string(first),
                                    Relation::equal, entry(r, v), entry(r, first), cfg.band()));
  }
}

double side_sum(const SpectralResult& r, Vertex first, Vertex last) {
  double s = 0.0;
  for (Vertex v = first; v <= last; ++v) s += entry(r, v);
  return s;
}

void require_odd(int n, int p, int q) { validate(FamilySpec{Family::b1, n, p, q}); }
void require_even(int n, int p, int q) { validate(FamilySpec{Family::b5, n, p, q}); }

double q_any(const Digraph& g, const VerifyConfig& cfg) {
  return is_strongly_connected(g) ? q_index(g, cfg.spectral).q : q_index_by_components(g, cfg.spectral);
}

}  // namespace

Certificate check_theorem1(int n, int p, int q, const VerifyConfig& cfg) {
  require_odd(n, p, q);
  auto c = start("thm1", npq(n, p, q), cfg);
  const auto r1 = q_index(member(Family::b1, n, p, q).graph, cfg.spectral);
  const auto r2 = q_index(member(Family::b2, n, p, q).graph, cfg.spectral);
  c.values["q_b1"] = r1.q;
  c.values["q_b2"] = r2.q;
  c.comparisons.push_back(ordered("q(B1)", "q(B2)", r1.q, r2.q, p == q, cfg.band()));

  if (q >= 2) {
    const auto f = largest_real_root({PolyKind::f, n, p, q});
    const auto g = largest_real_root({PolyKind::g, n, p, q});
    c.values["root_f"] = f.root;
    c.values["root_g"] = g.root;
    c.comparisons.push_back(ordered("root(f)", "root(g)", f.root, g.root, p == q, cfg.band()));
  } else {
    c.notes.push_back("polynomial route skipped: with q = 1 the path of B2 starts and ends at v_{p+1}, "
                      "so g is not its characteristic equation");
  }
  c.settle();
  return c;
}

Certificate check_theorem2(int n, int p, int q, const VerifyConfig& cfg) {
  require_odd(n, p, q);
  auto c = start("thm2", npq(n, p, q), cfg);
  if (p < 2) {
    c.notes.push_back("not applicable: with p = 1 the rotation (v_n,v_p) -> (v_n,v_1) is the identity");
    c.settle();
    return c;
  }
  const auto r1 = q_index(member(Family::b1, n, p, q).graph, cfg.spectral);
  const auto r3 = q_index(member(Family::b3, n, p, q).graph, cfg.spectral);
  c.values["q_b1"] = r1.q;
  c.values["q_b3"] = r3.q;
  c.values["x_1"] = entry(r1, 1);
  c.values["x_p"] = entry(r1, p);
  c.comparisons.push_back(compare("q(B1) < q(B3)", Relation::less, r1.q, r3.q, cfg.band()));
  c.comparisons.push_back(compare("x_p < x_1 on B1", Relation::less, entry(r1, p), entry(r1, 1), cfg.band()));
  c.settle();
  return c;
}

Certificate check_theorem3(int n, int p, int q, const VerifyConfig& cfg) {
  require_odd(n, p, q);
  auto c = start("thm3", npq(n, p, q), cfg);
  if (q < 2) {
    c.notes.push_back("not applicable: with q = 1 the rotation (v_n,v_{p+q}) -> (v_n,v_{p+1}) is the identity");
    c.settle();
    return c;
  }
  const auto r2 = q_index(member(Family::b2, n, p, q).graph, cfg.spectral);
  const auto r4 = q_index(member(Family::b4, n, p, q).graph, cfg.spectral);
  c.values["q_b2"] = r2.q;
  c.values["q_b4"] = r4.q;
  c.values["x_p+1"] = entry(r2, p + 1);
  c.values["x_p+q"] = entry(r2, p + q);
  c.comparisons.push_back(compare("q(B2) < q(B4)", Relation::less, r2.q, r4.q, cfg.band()));
  c.comparisons.push_back(
      compare("x_{p+q} < x_{p+1} on B2", Relation::less, entry(r2, p + q), entry(r2, p + 1), cfg.band()));
  c.settle();
  return c;
}

Certificate check_theorem4(int n, int p, int q, const VerifyConfig& cfg) {
  require_even(n, p, q);
  auto c = start("thm4", npq(n, p, q), cfg);
  const auto r5 = q_index(member(Family::b5, n, p, q).graph, cfg.spectral);
  const auto r6 = q_index(member(Family::b6, n, p, q).graph, cfg.spectral);
  c.values["q_b5"] = r5.q;
  c.values["q_b6"] = r6.q;
  c.comparisons.push_back(ordered("q(B5)", "q(B6)", r5.q, r6.q, p == q, cfg.band()));
  c.settle();
  return c;
}

Certificate check_theorem5(int n, int p, int q, const VerifyConfig& cfg) {
  require_odd(n, p, q);
  auto c = start("thm5", npq(n, p, q), cfg);
  const auto b1 = member(Family::b1, n, p, q).graph;
  const auto r1 = q_index(b1, cfg.spectral);
  c.values["q_b1"] = r1.q;

  // Same order: rotate the closing arc of B1 onto v_{p+1}.
  const auto rotated = rotate_arc(b1, n, p, p + 1);
  const auto rs = q_index(rotated, cfg.spectral);
  c.values["q_b1_rotated"] = rs.q;
  c.values["x_p"] = entry(r1, p);
  c.values["x_p+1"] = entry(r1, p + 1);
  c.comparisons.push_back(compare("x_p < x_{p+1} on B1", Relation::less, entry(r1, p), entry(r1, p + 1), cfg.band()));
  c.comparisons.push_back(
      compare("same order: q(B1_n) < q(B1_n - (v_n,v_p) + (v_n,v_{p+1}))", Relation::less, r1.q, rs.q, cfg.band()));

  if (n - p - q >= 3) {
    const auto r5 = q_index(member(Family::b5, n - 1, p, q).graph, cfg.spectral);
    c.values["q_b5_n-1"] = r5.q;
    c.comparisons.push_back(compare("stated: q(B1_n) < q(B5_{n-1})", Relation::less, r1.q, r5.q, cfg.band()));
  } else {
    c.notes.push_back("stated form not applicable: B5_{n-1,p,q} needs (n-1)-p-q >= 2");
  }
  if (p == 1) {
    c.notes.push_back("p = 1: B1 is degenerate (v_1 = v_p, the attached path closes into a cycle)");
  }
  c.settle();
  return c;
}

Certificate check_theorem6(int n, int p, int q, const VerifyConfig& cfg) {
  require_even(n, p, q);
  auto c = start("thm6", npq(n, p, q), cfg);
  const auto b5 = member(Family::b5, n, p, q).graph;
  const auto b1 = member(Family::b1, n - 1, p, q).graph;
  const auto r5 = q_index(b5, cfg.spectral);
  const auto r1 = q_index(b1, cfg.spectral);
  c.values["q_b5"] = r5.q;
  c.values["q_b1_n-1"] = r1.q;
  c.comparisons.push_back(compare("q(B5_n) <= q(B1_{n-1})", Relation::less_equal, r5.q, r1.q, cfg.band()));

  // B5* = B5 - (v_{n-1},v_n) + (v_{n-1},v_p) splits into B1_{n-1} and {v_n}.
  const auto star = rotate_arc(b5, n - 1, n, p);
  const auto components = strongly_connected_components(star);
  json sizes = json::array();
  for (const auto& comp : components) sizes.push_back(comp.size());
  c.values["b5star_component_sizes"] = sizes;
  c.comparisons.push_back(compare("B5* has two strong components", Relation::equal,
                                  static_cast<double>(components.size()), 2.0, 0.0));
  std::vector<Vertex> head(static_cast<std::size_t>(n - 1));
  for (Vertex v = 1; v < n; ++v) head[static_cast<std::size_t>(v - 1)] = v;
  const bool restricted_is_b1 = star.induced(head) == b1;
  c.comparisons.push_back(compare("B5* on v_1..v_{n-1} is B1_{n-1}", Relation::equal, restricted_is_b1 ? 1.0 : 0.0,
                                  1.0, 0.0));
  const double q_star = q_index_by_components(star, cfg.spectral);
  c.values["q_b5star"] = q_star;
  c.comparisons.push_back(compare("q(B5*) = q(B1_{n-1})", Relation::equal, q_star, r1.q, cfg.band()));
  c.comparisons.push_back(compare("q(B5) <= q(B5*)", Relation::less_equal, r5.q, q_star, cfg.band()));

  c.values["x_n"] = entry(r5, n);
  c.values["x_p"] = entry(r5, p);
  c.comparisons.push_back(compare("x_n <= x_p on B5", Relation::less_equal, entry(r5, n), entry(r5, p), cfg.band()));
  add_residual(c, "ρ x_n = x_n + x_{p+1} on B5", r5.q * entry(r5, n) - entry(r5, n) - entry(r5, p + 1), cfg);
  c.settle();
  return c;
}

Certificate check_chain(int n, int p, int q, const VerifyConfig& cfg) {
  require_even(n, p, q);
  auto c = start("chain", npq(n, p, q), cfg);
  const double q5 = q_index(member(Family::b5, n, p, q).graph, cfg.spectral).q;
  const double q1 = q_index(member(Family::b1, n - 1, p, q).graph, cfg.spectral).q;
  const double q2 = q_index(member(Family::b2, n - 1, p, q).graph, cfg.spectral).q;
  c.values["q_b5"] = q5;
  c.values["q_b1_n-1"] = q1;
  c.values["q_b2_n-1"] = q2;
  c.comparisons.push_back(compare("q(B5_n) <= q(B1_{n-1})", Relation::less_equal, q5, q1, cfg.band()));
  c.comparisons.push_back(compare("q(B1_{n-1}) <= q(B2_{n-1})", Relation::less_equal, q1, q2, cfg.band()));
  if (q >= 2) {
    const double q4 = q_index(member(Family::b4, n - 1, p, q).graph, cfg.spectral).q;
    c.values["q_b4_n-1"] = q4;
    c.comparisons.push_back(compare("q(B2_{n-1}) <= q(B4_{n-1})", Relation::less_equal, q2, q4, cfg.band()));
  } else {
    c.notes.push_back("B4 link omitted: B4 is undefined for q = 1");
  }
  c.settle();
  return c;
}

Certificate check_lemma6(int n, int p, int q, const VerifyConfig& cfg) {
  require_odd(n, p, q);
  auto c = start("lemma6", npq(n, p, q), cfg);
  if (p < 2) {
    c.notes.push_back("not applicable: with p = 1, x_1 and x_p are the same entry");
    c.settle();
    return c;
  }
  const auto r = q_index(member(Family::b1, n, p, q).graph, cfg.spectral);
  c.values["q_b1"] = r.q;
  c.values["x_1"] = entry(r, 1);
  c.values["x_p"] = entry(r, p);
  c.values["x_p+1"] = entry(r, p + 1);
  c.comparisons.push_back(compare("(i) x_p < x_1", Relation::less, entry(r, p), entry(r, 1), cfg.band()));
  c.comparisons.push_back(compare("(ii) x_p < x_{p+1}", Relation::less, entry(r, p), entry(r, p + 1), cfg.band()));
  c.settle();
  return c;
}

Certificate check_charpoly_cross(int n, int p, int q, const VerifyConfig& cfg) {
  require_odd(n, p, q);
  auto c = start("charpoly-cross", npq(n, p, q), cfg);
  const double q1 = q_index(member(Family::b1, n, p, q).graph, cfg.spectral).q;
  const double q2 = q_index(member(Family::b2, n, p, q).graph, cfg.spectral).q;
  const auto f = largest_real_root({PolyKind::f, n, p, q});
  const auto g = largest_real_root({PolyKind::g, n, p, q});
  c.values["q_b1"] = q1;
  c.values["q_b2"] = q2;
  c.values["root_f"] = f.root;
  c.values["root_g"] = g.root;
  c.values["sign_changes_f"] = f.sign_changes;
  c.values["sign_changes_g"] = g.sign_changes;
  c.comparisons.push_back(compare("|q(B1) - root(f)|", Relation::within, q1, f.root, cfg.cross_tol));
  c.comparisons.push_back(compare("|q(B2) - root(g)|", Relation::within, q2, g.root, cfg.cross_tol));
  if (p == 1) c.notes.push_back("p = 1: B1 is degenerate (v_1 = v_p)");
  if (q == 1) c.notes.push_back("q = 1: B2 is degenerate (v_{p+1} = v_{p+q})");
  c.settle();
  return c;
}

Certificate check_perron_structure(int n, int p, int q, Family variant, const VerifyConfig& cfg) {
  json params = npq(n, p, q);
  params["family"] = family_name(variant);
  auto c = start("perron", std::move(params), cfg);
  if (variant != Family::b1 && variant != Family::b2 && variant != Family::b5 && variant != Family::b6) {
    throw InvalidInput("Perron structure checks cover b1, b2, b5 and b6");
  }
  const auto built = member(variant, n, p, q);
  const auto r = q_index(built.graph, cfg.spectral);
  c.values["q"] = r.q;
  c.values["x"] = r.x;
  c.values["residual"] = r.residual;
  if (built.degenerate_attachment) {
    c.notes.push_back("not applicable: both ends of the attached path are the same vertex");
    c.settle();
    return c;
  }
  add_residual(c, "Qx = qx (max norm)", r.residual, cfg);

  const double rho = r.q;
  const int k = n - p - q;
  const double lift = std::pow(rho - 1.0, k);
  auto x = [&](Vertex v) { return entry(r, v); };
  const Vertex first_path = p + q + 1;
  switch (variant) {
    case Family::b1:
      add_group(c, "V_p minus v_1", r, 2, p, cfg);
      add_group(c, "V_q", r, p + 1, p + q, cfg);
      add_residual(c, "v_1 row: ρ x_1 = (q+1) x_1 + x_{p+q+1} + q x_{p+1}",
                   rho * x(1) - ((q + 1) * x(1) + x(first_path) + q * x(p + 1)), cfg);
      add_residual(c, "v_p row: ρ x_p = q x_p + q x_{p+1}", rho * x(p) - (q * x(p) + q * x(p + 1)), cfg);
      add_residual(c, "v_{p+1} row: ρ x_{p+1} = p x_{p+1} + x_1 + (p-1) x_p",
                   rho * x(p + 1) - (p * x(p + 1) + x(1) + (p - 1) * x(p)), cfg);
      add_residual(c, "path: (ρ-1)^(n-p-q) x_{p+q+1} = x_p", lift * x(first_path) - x(p), cfg);
      add_residual(c, "v_p row reduced: (ρ-q) x_p = q x_{p+1}", (rho - q) * x(p) - q * x(p + 1), cfg);
      break;
    case Family::b2:
      add_group(c, "V_p", r, 1, p, cfg);
      add_group(c, "V_q minus v_{p+1}", r, p + 2, p + q, cfg);
      add_residual(c, "V_p row: ρ x_1 = q x_1 + sum_{V_q} x", rho * x(1) - (q * x(1) + side_sum(r, p + 1, p + q)), cfg);
      add_residual(c, "v_{p+1} row: ρ x_{p+1} = (p+1) x_{p+1} + x_{p+q+1} + sum_{V_p} x",
                   rho * x(p + 1) - ((p + 1) * x(p + 1) + x(first_path) + side_sum(r, 1, p)), cfg);
      add_residual(c, "v_{p+q} row: ρ x_{p+q} = p x_{p+q} + sum_{V_p} x",
                   rho * x(p + q) - (p * x(p + q) + side_sum(r, 1, p)), cfg);
      add_residual(c, "path: (ρ-1)^(n-p-q) x_{p+q+1} = x_{p+q}", lift * x(first_path) - x(p + q), cfg);
      break;
    case Family::b5:
      add_group(c, "V_p minus v_1", r, 2, p, cfg);
      add_group(c, "V_q", r, p + 1, p + q, cfg);
      add_residual(c, "v_1 row: ρ x_1 = (q+1) x_1 + x_{p+q+1} + sum_{V_q} x",
                   rho * x(1) - ((q + 1) * x(1) + x(first_path) + side_sum(r, p + 1, p + q)), cfg);
      if (p >= 2) {
        add_residual(c, "v_p row: ρ x_p = q x_p + sum_{V_q} x", rho * x(p) - (q * x(p) + side_sum(r, p + 1, p + q)),
                     cfg);
      }
      add_residual(c, "v_{p+1} row: ρ x_{p+1} = p x_{p+1} + sum_{V_p} x",
                   rho * x(p + 1) - (p * x(p + 1) + side_sum(r, 1, p)), cfg);
      add_residual(c, "path: (ρ-1)^(n-p-q) x_{p+q+1} = x_{p+1}", lift * x(first_path) - x(p + 1), cfg);
      break;
    case Family::b6:
      add_group(c, "V_p", r, 1, p, cfg);
      add_group(c, "V_q minus v_{p+1}", r, p + 2, p + q, cfg);
      add_residual(c, "V_p row: ρ x_1 = q x_1 + sum_{V_q} x", rho * x(1) - (q * x(1) + side_sum(r, p + 1, p + q)), cfg);
      add_residual(c, "v_{p+1} row: ρ x_{p+1} = (p+1) x_{p+1} + x_{p+q+1} + sum_{V_p} x",
                   rho * x(p + 1) - ((p + 1) * x(p + 1) + x(first_path) + side_sum(r, 1, p)), cfg);
      if (q >= 2) {
        add_residual(c, "v_{p+q} row: ρ x_{p+q} = p x_{p+q} + sum_{V_p} x",
                     rho * x(p + q) - (p * x(p + q) + side_sum(r, 1, p)), cfg);
      }
      add_residual(c, "path: (ρ-1)^(n-p-q) x_{p+q+1} = x_1", lift * x(first_path) - x(1), cfg);
      break;
    default:
      break;
  }
  c.settle();
  return c;
}

Certificate check_lemma4(const Digraph& g, const std::vector<Vertex>& path, const VerifyConfig& cfg) {
  json params = json{{"n", g.order()}, {"path", path}};
  auto c = start("lemma4", std::move(params), cfg);
  auto reject = [&](const std::string& why) {
    c.notes.push_back("not applicable: " + why);
    c.settle();
    return c;
  };
  if (path.size() < 3) return reject("path needs at least 3 vertices");
  for (Vertex v : path) {
    if (v < 1 || v > g.order()) return reject("path vertex " + std::to_string(v) + " out of range");
  }
  auto sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return reject("path repeats a vertex");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_arc(path[i], path[i + 1])) {
      return reject("(" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) + ") is not an arc");
    }
  }
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (g.out_degree(path[i]) != 1) {
      return reject("internal vertex " + std::to_string(path[i]) + " has outdegree " +
                    std::to_string(g.out_degree(path[i])));
    }
  }
  if (!is_strongly_connected(g)) return reject("digraph is not strongly connected");
  if (is_directed_cycle(g)) return reject("digraph is a directed cycle");

  const auto r = q_index(g, cfg.spectral);
  json entries = json::array();
  for (Vertex v : path) entries.push_back(entry(r, v));
  c.values["q"] = r.q;
  c.values["path_entries"] = entries;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    c.comparisons.push_back(compare("x_" + std::to_string(path[i]) + " < x_" + std::to_string(path[i + 1]),
                                    Relation::less, entry(r, path[i]), entry(r, path[i + 1]), cfg.band()));
  }
  c.settle();
  return c;
}

Certificate check_lemma4_family(const FamilySpec& spec, const VerifyConfig& cfg) {
  Vertex first = 0;
  Vertex last = 0;
  switch (spec.variant) {
    case Family::b1:
      first = 1, last = spec.p;
      break;
    case Family::b2:
      first = spec.p + 1, last = spec.p + spec.q;
      break;
    case Family::b5:
      first = 1, last = spec.p + 1;
      break;
    case Family::b6:
      first = spec.p + 1, last = 1;
      break;
    default:
      throw InvalidInput("Lemma 4 family checks cover b1, b2, b5 and b6");
  }
  const auto built = build(spec);
  std::vector<Vertex> path{first};
  for (Vertex v = spec.p + spec.q + 1; v <= spec.n; ++v) path.push_back(v);
  if (last != first) path.push_back(last);
  auto c = check_lemma4(built.graph, path, cfg);
  c.params["family"] = family_name(spec.variant);
  c.params["p"] = spec.p;
  c.params["q"] = spec.q;
  return c;
}

Certificate check_lemma1(const Digraph& g, Vertex u, Vertex v, Vertex w, const VerifyConfig& cfg) {
  json params = json{{"digraph", digraph_to_json(g)}, {"u", u}, {"v", v}, {"w", w}};
  auto c = start("lemma1", std::move(params), cfg);
  auto reject = [&](const std::string& why) {
    c.notes.push_back("not applicable: " + why);
    c.settle();
    return c;
  };
  if (u == v || v == w || u == w) return reject("u, v, w must be distinct");
  if (!g.has_arc(u, v)) return reject("(u,v) is not an arc");
  if (g.has_arc(u, w)) return reject("(u,w) is already an arc");
  if (!is_strongly_connected(g)) return reject("digraph is not strongly connected");

  const auto r = q_index(g, cfg.spectral);
  const double xv = entry(r, v);
  const double xw = entry(r, w);
  if (xw < xv - cfg.band()) return reject("x_w < x_v");
  const auto h = rotate_arc(g, u, v, w);
  const bool h_strong = is_strongly_connected(h);
  const double qh = q_any(h, cfg);
  c.values["q_g"] = r.q;
  c.values["q_h"] = qh;
  c.values["x_v"] = xv;
  c.values["x_w"] = xw;
  c.values["h_strongly_connected"] = h_strong;
  c.comparisons.push_back(compare("q(G) <= q(H)", Relation::less_equal, r.q, qh, cfg.band()));
  if (h_strong && xw - xv > cfg.band()) {
    c.comparisons.push_back(compare("q(G) < q(H)", Relation::less, r.q, qh, cfg.band()));
  }
  c.settle();
  return c;
}

Certificate check_lemma3(const Digraph& g, Arc removed, const VerifyConfig& cfg) {
  json params = json{{"digraph", digraph_to_json(g)}, {"arc", {removed.tail, removed.head}}};
  auto c = start("lemma3", std::move(params), cfg);
  if (!g.has_arc(removed.tail, removed.head) || !is_strongly_connected(g)) {
    c.notes.push_back("not applicable: needs a strongly connected digraph and one of its arcs");
    c.settle();
    return c;
  }
  const double qg = q_index(g, cfg.spectral).q;
  const auto h = g.without_arc(removed);
  const double qh = q_any(h, cfg);
  c.values["q_g"] = qg;
  c.values["q_h"] = qh;
  c.values["h_strongly_connected"] = is_strongly_connected(h);
  c.comparisons.push_back(compare("q(G - e) < q(G)", Relation::less, qh, qg, cfg.band()));
  c.settle();
  return c;
}

Certificate check_lemma5(const Digraph& g, Arc subdivided, const VerifyConfig& cfg) {
  json params = json{{"digraph", digraph_to_json(g)}, {"arc", {subdivided.tail, subdivided.head}}};
  auto c = start("lemma5", std::move(params), cfg);
  if (!g.has_arc(subdivided.tail, subdivided.head) || !is_strongly_connected(g) || is_directed_cycle(g)) {
    c.notes.push_back("not applicable: needs a strongly connected non-cycle digraph and one of its arcs");
    c.settle();
    return c;
  }
  const double qg = q_index(g, cfg.spectral).q;
  const double qw = q_index(subdivide_arc(g, subdivided.tail, subdivided.head), cfg.spectral).q;
  c.values["q_g"] = qg;
  c.values["q_gw"] = qw;
  c.comparisons.push_back(compare("q(G^w) <= q(G)", Relation::less_equal, qw, qg, cfg.subdivision_tol));
  c.settle();
  return c;
}

}  // namespace qindex
