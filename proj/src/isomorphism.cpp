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
#include <string>

#include "qindex/digraph.hpp"
#include "qindex/error.hpp"

namespace qindex {
namespace {

struct DegreePair {
  int out = 0;
  int in = 0;
  auto operator<=>(const DegreePair&) const = default;
};

class Matcher {
 public:
  Matcher(const Digraph& g, const Digraph& h) : n_(g.order()), g_(matrix(g)), h_(matrix(h)) {
    for (Vertex v = 1; v <= n_; ++v) {
      gdeg_.push_back({g.out_degree(v), g.in_degree(v)});
      hdeg_.push_back({h.out_degree(v), h.in_degree(v)});
    }
    // Most constrained first: vertices whose degree pair is rare in g.
    order_.resize(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) order_[static_cast<std::size_t>(k)] = k;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      auto count = [&](int v) { return std::count(gdeg_.begin(), gdeg_.end(), gdeg_[static_cast<std::size_t>(v)]); };
      return count(a) < count(b);
    });
    map_.assign(static_cast<std::size_t>(n_), -1);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  bool degree_profiles_match() const {
    auto a = gdeg_;
    auto b = hdeg_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool search(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<std::size_t>(w)] || gdeg_[static_cast<std::size_t>(v)] != hdeg_[static_cast<std::size_t>(w)]) {
        continue;
      }
      if (!consistent(v, w, depth)) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (search(depth + 1)) return true;
      map_[static_cast<std::size_t>(v)] = -1;
      used_[static_cast<std::size_t>(w)] = false;
    }
    return false;
  }

  std::vector<Vertex> mapping() const {
    std::vector<Vertex> out;
    out.reserve(map_.size());
    for (int w : map_) out.push_back(w + 1);
    return out;
  }

 private:
  static std::vector<std::vector<char>> matrix(const Digraph& g) {
    std::vector<std::vector<char>> m(static_cast<std::size_t>(g.order()),
                                     std::vector<char>(static_cast<std::size_t>(g.order()), 0));
    for (const Arc& a : g.arcs()) m[static_cast<std::size_t>(a.tail - 1)][static_cast<std::size_t>(a.head - 1)] = 1;
    return m;
  }

  bool consistent(int v, int w, std::size_t depth) const {
    const auto vi = static_cast<std::size_t>(v);
    const auto wi = static_cast<std::size_t>(w);
    for (std::size_t k = 0; k < depth; ++k) {
      const auto u = static_cast<std::size_t>(order_[k]);
      const auto x = static_cast<std::size_t>(map_[u]);
      if (g_[vi][u] != h_[wi][x] || g_[u][vi] != h_[x][wi]) return false;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<char>> g_;
  std::vector<std::vector<char>> h_;
  std::vector<DegreePair> gdeg_;
  std::vector<DegreePair> hdeg_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g, const Digraph& h, int max_order) {
  if (g.order() > max_order || h.order() > max_order) {
    throw InvalidInput("isomorphism search is capped at " + std::to_string(max_order) + " vertices");
  }
  if (g.order() != h.order() || g.arc_count() != h.arc_count()) return std::nullopt;
  Matcher matcher(g, h);
  if (!matcher.degree_profiles_match()) return std::nullopt;
  if (!matcher.search()) return std::nullopt;
  return matcher.mapping();
}

bool are_isomorphic(const Digraph& g, const Digraph& h, int max_order) {
  return find_isomorphism(g, h, max_order).has_value();
}

}  // namespace qindex
