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

#include "qindex/digraph.hpp"

#include <algorithm>
#include <string>

#include "qindex/error.hpp"

namespace qindex {

Digraph::Digraph(int order) : Digraph(order, {}) {}

Digraph::Digraph(int order, std::vector<Arc> arcs) : n_(order), arcs_(std::move(arcs)) {
  if (n_ < 0) throw InvalidInput("digraph order must be nonnegative");
  for (const Arc& a : arcs_) {
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.tail == a.head) {
      throw InvalidInput("loop at vertex " + std::to_string(a.tail) + " is not allowed");
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  index();
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
  }
}

void Digraph::index() {
  heads_.resize(arcs_.size());
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  in_degree_.assign(static_cast<std::size_t>(n_), 0);
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    heads_[k] = arcs_[k].head;
    ++offsets_[static_cast<std::size_t>(arcs_[k].tail)];
    ++in_degree_[static_cast<std::size_t>(arcs_[k].head - 1)];
  }
  for (std::size_t v = 1; v < offsets_.size(); ++v) offsets_[v] += offsets_[v - 1];
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  check_vertex(tail);
  check_vertex(head);
  auto nbrs = out_neighbors(tail);
  return std::binary_search(nbrs.begin(), nbrs.end(), head);
}

int Digraph::out_degree(Vertex v) const {
  check_vertex(v);
  const auto idx = static_cast<std::size_t>(v);
  return static_cast<int>(offsets_[idx] - offsets_[idx - 1]);
}

int Digraph::in_degree(Vertex v) const {
  check_vertex(v);
  return in_degree_[static_cast<std::size_t>(v - 1)];
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  const auto idx = static_cast<std::size_t>(v);
  return std::span<const Vertex>(heads_).subspan(offsets_[idx - 1], offsets_[idx] - offsets_[idx - 1]);
}

Digraph Digraph::with_arc(Arc a) const {
  auto arcs = arcs_;
  arcs.push_back(a);
  return Digraph(n_, std::move(arcs));
}

Digraph Digraph::without_arc(Arc a) const {
  auto arcs = arcs_;
  auto it = std::lower_bound(arcs.begin(), arcs.end(), a);
  if (it == arcs.end() || *it != a) {
    throw InvalidInput("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ") not present");
  }
  arcs.erase(it);
  return Digraph(n_, std::move(arcs));
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> label(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    check_vertex(vertices[k]);
    if (label[static_cast<std::size_t>(vertices[k])] != 0) throw InvalidInput("repeated vertex in induced set");
    label[static_cast<std::size_t>(vertices[k])] = static_cast<Vertex>(k + 1);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : arcs_) {
    const Vertex t = label[static_cast<std::size_t>(a.tail)];
    const Vertex h = label[static_cast<std::size_t>(a.head)];
    if (t != 0 && h != 0) arcs.push_back({t, h});
  }
  return Digraph(static_cast<int>(vertices.size()), std::move(arcs));
}

Digraph Digraph::relabeled(std::span<const Vertex> mapping) const {
  if (static_cast<int>(mapping.size()) != n_) throw InvalidInput("relabeling has wrong length");
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (Vertex m : mapping) {
    check_vertex(m);
    if (seen[static_cast<std::size_t>(m)]) throw InvalidInput("relabeling is not a permutation");
    seen[static_cast<std::size_t>(m)] = true;
  }
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    arcs.push_back({mapping[static_cast<std::size_t>(a.tail - 1)], mapping[static_cast<std::size_t>(a.head - 1)]});
  }
  return Digraph(n_, std::move(arcs));
}

int out_degree(const Digraph& g, Vertex v) { return g.out_degree(v); }

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& g) {
  // Iterative Tarjan.
  const int n = g.order();
  std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n) + 1, false);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::vector<std::vector<Vertex>> components;
  int counter = 0;

  for (Vertex root = 1; root <= n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, next] = call.back();
      const auto vi = static_cast<std::size_t>(v);
      if (next == 0) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = true;
      }
      auto nbrs = g.out_neighbors(v);
      bool descended = false;
      while (next < nbrs.size()) {
        const Vertex w = nbrs[next++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[wi]) low[vi] = std::min(low[vi], index[wi]);
      }
      if (descended) continue;

      if (low[vi] == index[vi]) {
        std::vector<Vertex> component;
        Vertex w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      const Vertex finished = v;
      call.pop_back();
      if (!call.empty()) {
        const auto pi = static_cast<std::size_t>(call.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

bool is_strongly_connected(const Digraph& g) {
  return g.order() > 0 && strongly_connected_components(g).size() == 1;
}

bool is_directed_cycle(const Digraph& g) {
  const int n = g.order();
  if (n < 2 || static_cast<int>(g.arc_count()) != n) return false;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.out_degree(v) != 1 || g.in_degree(v) != 1) return false;
  }
  return is_strongly_connected(g);
}

bool check_bipartition(const Digraph& g, const Bipartition& sides) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
  auto assign = [&](const std::vector<Vertex>& cls, int s) {
    for (Vertex v : cls) {
      if (v < 1 || v > n) throw InvalidInput("bipartition vertex " + std::to_string(v) + " out of range");
      if (side[static_cast<std::size_t>(v)] != -1) {
        throw InvalidInput("vertex " + std::to_string(v) + " appears twice in bipartition");
      }
      side[static_cast<std::size_t>(v)] = s;
    }
  };
  assign(sides.left, 0);
  assign(sides.right, 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (side[static_cast<std::size_t>(v)] == -1) {
      throw InvalidInput("vertex " + std::to_string(v) + " missing from bipartition");
    }
  }
  return std::all_of(g.arcs().begin(), g.arcs().end(), [&](const Arc& a) {
    return side[static_cast<std::size_t>(a.tail)] != side[static_cast<std::size_t>(a.head)];
  });
}

}  // namespace qindex
