// Copyright 2026 The GFL Authors
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
#include <map>

#include "gfl/errors.h"
#include "gfl/forest.h"

namespace gfl {

namespace {

std::string SequentialId(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return MakeId("v", i, std::to_string(n - 1).size());
}

FiniteGraph NamedGraph(std::size_t n, const std::vector<FiniteGraph::Edge>& edges) {
  std::vector<std::string> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ids.push_back(SequentialId(i, n));
  return FiniteGraph::FromIndexedEdges(std::move(ids), edges);
}

struct CodedGraph {
  std::string code;
  FiniteGraph graph;
};

// Trees in K_alpha grouped by size. K_alpha is closed under removing a leaf,
// so every member of size n extends a member of size n - 1 by one leaf.
std::vector<std::vector<CodedGraph>> TreesBySize(ClassIndex alpha,
                                                 std::size_t max_size) {
  std::vector<std::vector<CodedGraph>> by_size(max_size + 1);
  if (max_size == 0) return by_size;
  {
    FiniteGraph single = NamedGraph(1, {});
    by_size[1].push_back({CanonicalCode(single), single});
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    std::map<std::string, FiniteGraph> found;
    for (const auto& prev : by_size[n - 1]) {
      std::vector<FiniteGraph::Edge> edges = prev.graph.edges();
      for (Vertex v = 0; v < static_cast<Vertex>(n - 1); ++v) {
        edges.emplace_back(v, static_cast<Vertex>(n - 1));
        FiniteGraph t = NamedGraph(n, edges);
        edges.pop_back();
        if (!InClass(t, alpha)) continue;
        std::string code = CanonicalCode(t);
        found.emplace(std::move(code), std::move(t));
      }
    }
    for (auto& [code, t] : found) by_size[n].push_back({code, std::move(t)});
  }
  return by_size;
}

// Relabels g component by component in order of component code; inside a
// component the representative's own vertex order is kept.
FiniteGraph Canonicalize(const FiniteGraph& g) {
  const Components comps = ConnectedComponents(g);
  std::vector<std::pair<std::string, std::size_t>> keyed;
  for (std::size_t i = 0; i < comps.count(); ++i) {
    FiniteGraph part = g.Induced(VertexSet(comps.members[i]));
    keyed.emplace_back(CanonicalCode(part), i);
  }
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<Vertex> new_index(g.order());
  Vertex next = 0;
  for (const auto& [code, i] : keyed) {
    for (Vertex v : comps.members[i]) new_index[v] = next++;
  }
  std::vector<FiniteGraph::Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(new_index[u], new_index[v]);
  return NamedGraph(g.order(), edges);
}

void CheckEnumerationSize(std::size_t max_size, const Capacity& cap) {
  if (max_size > cap.enumerate_size) {
    throw CapacityError("enumerate_size", max_size, cap.enumerate_size);
  }
}

}  // namespace

std::vector<FiniteGraph> EnumerateTrees(ClassIndex alpha, std::size_t max_size,
                                        const Capacity& cap) {
  CheckEnumerationSize(max_size, cap);
  auto by_size = TreesBySize(alpha, max_size);
  std::vector<FiniteGraph> out;
  for (auto& bucket : by_size) {
    for (auto& t : bucket) out.push_back(Canonicalize(t.graph));
  }
  return out;
}

std::vector<FiniteGraph> EnumerateClass(ClassIndex alpha, std::size_t max_size,
                                        const Capacity& cap) {
  CheckEnumerationSize(max_size, cap);
  const auto by_size = TreesBySize(alpha, max_size);
  std::vector<const CodedGraph*> trees;
  for (const auto& bucket : by_size) {
    for (const auto& t : bucket) trees.push_back(&t);
  }

  // Forests are multisets of trees: non-decreasing index sequences.
  std::vector<CodedGraph> forests;
  std::vector<std::size_t> chosen;
  auto emit = [&]() {
    std::vector<FiniteGraph::Edge> edges;
    Vertex offset = 0;
    for (std::size_t idx : chosen) {
      for (const auto& [u, v] : trees[idx]->graph.edges()) {
        edges.emplace_back(u + offset, v + offset);
      }
      offset += static_cast<Vertex>(trees[idx]->graph.order());
    }
    FiniteGraph f = Canonicalize(NamedGraph(offset, edges));
    std::string code = CanonicalCode(f);
    forests.push_back({std::move(code), std::move(f)});
  };
  auto recurse = [&](auto&& self, std::size_t from, std::size_t budget) -> void {
    emit();
    for (std::size_t i = from; i < trees.size(); ++i) {
      const std::size_t sz = trees[i]->graph.order();
      if (sz > budget) break;  // trees are sorted by size
      chosen.push_back(i);
      self(self, i, budget - sz);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, max_size);

  std::sort(forests.begin(), forests.end(),
            [](const CodedGraph& a, const CodedGraph& b) {
              if (a.graph.order() != b.graph.order()) {
                return a.graph.order() < b.graph.order();
              }
              return a.code < b.code;
            });
  std::vector<FiniteGraph> out;
  out.reserve(forests.size());
  for (auto& f : forests) out.push_back(std::move(f.graph));
  return out;
}

}  // namespace gfl
