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

#include "canonical_internal.h"
#include "gfl/errors.h"
#include "gfl/forest.h"

namespace gfl {
namespace internal {

namespace {

// "[i,j]" for the mark positions held by v, empty when v is unmarked.
std::string MarkLabel(Vertex v, std::span<const Vertex> marks) {
  std::string label;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (marks[i] != v) continue;
    label += label.empty() ? "[" : ",";
    label += std::to_string(i);
  }
  if (!label.empty()) label += "]";
  return label;
}

class LocalIndex {
 public:
  explicit LocalIndex(std::span<const Vertex> component) : comp_(component) {}
  int operator()(Vertex v) const {
    return static_cast<int>(std::lower_bound(comp_.begin(), comp_.end(), v) -
                            comp_.begin());
  }

 private:
  std::span<const Vertex> comp_;
};

std::string RootedCode(const FiniteGraph& g, std::span<const Vertex> comp,
                       const LocalIndex& local, Vertex root,
                       std::span<const Vertex> marks) {
  const std::size_t n = comp.size();
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, -1);
  order.reserve(n);
  std::vector<Vertex> stack{root};
  parent[local(root)] = root;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      const int lw = local(w);
      if (parent[lw] >= 0) continue;
      parent[lw] = v;
      stack.push_back(w);
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const int lv = local(v);
    auto& kids = child_codes[lv];
    std::sort(kids.begin(), kids.end());
    std::string code = "(" + MarkLabel(v, marks);
    for (auto& k : kids) code += k;
    code += ")";
    kids.clear();
    kids.shrink_to_fit();
    if (v == root) {
      result = std::move(code);
    } else {
      child_codes[local(parent[lv])].push_back(std::move(code));
    }
  }
  return result;
}

}  // namespace

std::string TreeCode(const FiniteGraph& g, std::span<const Vertex> component,
                     std::span<const Vertex> marks) {
  if (component.empty()) return "";
  const LocalIndex local(component);
  const std::size_t n = component.size();
  // Peel leaves layer by layer; the last one or two survivors are centers.
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (std::size_t i = 0; i < n; ++i) {
    degree[i] = g.degree(component[i]);
    if (degree[i] <= 1) layer.push_back(component[i]);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      degree[local(v)] = 0;
      for (Vertex w : g.neighbors(v)) {
        if (--degree[local(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best = RootedCode(g, component, local, layer[0], marks);
  if (layer.size() == 2) {
    std::string other = RootedCode(g, component, local, layer[1], marks);
    if (other < best) best = std::move(other);
  }
  return best;
}

std::string ComponentsCode(const FiniteGraph& g,
                           std::span<const std::vector<Vertex>> components,
                           std::span<const Vertex> marks) {
  std::vector<std::string> codes;
  codes.reserve(components.size());
  for (const auto& comp : components) codes.push_back(TreeCode(g, comp, marks));
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) out += c;
  return out;
}

}  // namespace internal

std::string CanonicalCode(const FiniteGraph& g, std::span<const Vertex> marks) {
  for (Vertex m : marks) g.CheckVertex(m);
  if (!IsForest(g)) {
    throw NotAForestError("canonical code requires an acyclic graph");
  }
  const Components comps = ConnectedComponents(g);
  return internal::ComponentsCode(g, comps.members, marks);
}

}  // namespace gfl
