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

#include "qindex/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qindex/error.hpp"

namespace qindex {

std::string format_double(double value) {
  if (std::isnan(value)) return "null";
  if (std::isinf(value)) return value > 0 ? "1e999" : "-1e999";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

void dump_into(const json& value, std::string& out) {
  switch (value.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ',';
        first = false;
        dump_into(item, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_double(value.get<double>());
      break;
    default:
      out += value.dump();
      break;
  }
}

std::vector<Vertex> read_class(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw InvalidInput(std::string("bipartition needs an array '") + key + "'");
  }
  auto cls = doc.at(key).get<std::vector<Vertex>>();
  std::sort(cls.begin(), cls.end());
  return cls;
}

}  // namespace

std::string dump_json(const json& value) {
  std::string out;
  dump_into(value, out);
  return out;
}

json digraph_to_json(const Digraph& g, const std::optional<Bipartition>& sides) {
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  json doc = {{"n", g.order()}, {"arcs", std::move(arcs)}};
  if (sides) doc["bipartition"] = {{"left", sides->left}, {"right", sides->right}};
  return doc;
}

std::pair<Digraph, std::optional<Bipartition>> digraph_from_json(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("arcs")) {
      throw InvalidInput("digraph JSON needs keys 'n' and 'arcs'");
    }
    const int n = doc.at("n").get<int>();
    std::vector<Arc> arcs;
    for (const auto& pair : doc.at("arcs")) {
      if (!pair.is_array() || pair.size() != 2) throw InvalidInput("each arc must be a pair [i,j]");
      arcs.push_back({pair[0].get<Vertex>(), pair[1].get<Vertex>()});
    }
    Digraph g(n, std::move(arcs));
    std::optional<Bipartition> sides;
    if (doc.contains("bipartition") && !doc.at("bipartition").is_null()) {
      const auto& b = doc.at("bipartition");
      sides = Bipartition{read_class(b, "left"), read_class(b, "right")};
      check_bipartition(g, *sides);  // throws if malformed
    }
    return {std::move(g), std::move(sides)};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("digraph JSON: ") + e.what());
  }
}

std::string digraph_to_dot(const Digraph& g, const std::optional<Bipartition>& sides) {
  std::ostringstream out;
  out << "digraph {\n";
  for (Vertex v = 1; v <= g.order(); ++v) {
    out << "  " << v;
    if (sides) {
      const bool left = std::binary_search(sides->left.begin(), sides->left.end(), v);
      out << " [shape=" << (left ? "circle" : "box") << "]";
    }
    out << ";\n";
  }
  for (const Arc& a : g.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace qindex
