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
#include <cmath>
#include <limits>

#include "qindex/verify.hpp"

namespace qindex {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::less:
      return "<";
    case Relation::less_equal:
      return "<=";
    case Relation::equal:
      return "==";
    case Relation::within:
      return "~";
    case Relation::at_most:
      return "<=max";
  }
  return "?";
}

Comparison compare(std::string name, Relation relation, double lhs, double rhs, double required) {
  Comparison c{std::move(name), relation, lhs, rhs, required, 0.0, false};
  switch (relation) {
    case Relation::less:
      c.slack = (rhs - lhs) - required;
      c.ok = c.slack > 0.0;
      break;
    case Relation::less_equal:
      c.slack = rhs + required - lhs;
      c.ok = c.slack >= 0.0;
      break;
    case Relation::equal:
    case Relation::within:
      c.slack = required - std::abs(lhs - rhs);
      c.ok = c.slack >= 0.0;
      break;
    case Relation::at_most:
      c.slack = rhs - lhs;
      c.ok = c.slack >= 0.0;
      break;
  }
  // NaN never passes.
  if (std::isnan(c.slack)) c.ok = false;
  return c;
}

double Certificate::margin() const {
  if (comparisons.empty()) return std::numeric_limits<double>::quiet_NaN();
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : comparisons) m = std::min(m, c.slack);
  return m;
}

void Certificate::settle() {
  if (comparisons.empty()) {
    verdict = Verdict::not_applicable;
    return;
  }
  const bool all_ok = std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.ok; });
  verdict = all_ok ? Verdict::pass : Verdict::fail;
}

json to_json(const Certificate& c) {
  json comparisons = json::array();
  for (const auto& cmp : c.comparisons) {
    comparisons.push_back({{"name", cmp.name},
                           {"relation", relation_symbol(cmp.relation)},
                           {"lhs", cmp.lhs},
                           {"rhs", cmp.rhs},
                           {"required", cmp.required},
                           {"slack", cmp.slack},
                           {"ok", cmp.ok}});
  }
  json doc = {{"claim", c.claim},
              {"params", c.params},
              {"values", c.values},
              {"comparisons", std::move(comparisons)},
              {"notes", c.notes},
              {"verdict", verdict_name(c.verdict)},
              {"tolerance", c.tolerance},
              {"band", c.band},
              {"margin", c.margin()}};
  doc["timestamp"] = c.timestamp ? json(*c.timestamp) : json(nullptr);
  return doc;
}

std::string to_jsonl(const std::vector<Certificate>& certs) {
  std::string out;
  for (const auto& c : certs) {
    out += dump_json(to_json(c));
    out += '\n';
  }
  return out;
}

std::string csv_header() { return "claim,n,p,q,verdict,margin\n"; }

std::string to_csv_row(const Certificate& c) {
  auto field = [&](const char* key) -> std::string {
    if (c.params.contains(key) && c.params.at(key).is_number_integer()) {
      return std::to_string(c.params.at(key).get<long>());
    }
    return "";
  };
  const double m = c.margin();
  return c.claim + "," + field("n") + "," + field("p") + "," + field("q") + "," + std::string(verdict_name(c.verdict)) +
         "," + (std::isnan(m) ? std::string() : format_double(m)) + "\n";
}

std::string to_csv(const std::vector<Certificate>& certs) {
  std::string out = csv_header();
  for (const auto& c : certs) out += to_csv_row(c);
  return out;
}

}  // namespace qindex
