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

#include "gfl/strong.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/reference.h"

namespace gfl {

namespace {

// Components of G[s]; vertices outside s keep label -1.
struct InducedComponents {
  std::vector<int> label;
  int count = 0;
  std::size_t edges = 0;
};

InducedComponents ComponentsWithin(const FiniteGraph& g, const VertexSet& s) {
  InducedComponents out;
  out.label.assign(g.order(), -1);
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<Vertex> stack;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && v < w) ++out.edges;
    }
    if (out.label[v] >= 0) continue;
    out.label[v] = out.count;
    stack.push_back(v);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (in[w] && out.label[w] < 0) {
          out.label[w] = out.count;
          stack.push_back(w);
        }
      }
    }
    ++out.count;
  }
  return out;
}

bool IsForestOn(const InducedComponents& c, const VertexSet& s) {
  return c.edges + static_cast<std::size_t>(c.count) == s.size();
}

void CheckPair(const FiniteGraph& g, const VertexSet& a, const VertexSet& b) {
  g.CheckSet(a);
  g.CheckSet(b);
  if (!a.IsSubsetOf(b)) throw PreconditionError("A is not a subset of B");
}

void RequireForest(const FiniteGraph& g, const char* op) {
  if (!IsForest(g)) {
    throw NotAForestError(std::string(op) + " requires an acyclic graph");
  }
}

bool WeaklyClosedOnForest(const FiniteGraph& g, const VertexSet& a,
                          const InducedComponents& in_b) {
  const InducedComponents in_a = ComponentsWithin(g, a);
  std::vector<char> met(in_b.count, 0);
  int meeting = 0;
  for (Vertex v : a) {
    if (!met[in_b.label[v]]) {
      met[in_b.label[v]] = 1;
      ++meeting;
    }
  }
  return meeting == in_a.count;
}

}  // namespace

VertexSet ClosureResult::StageBefore(std::size_t i) const {
  std::vector<Vertex> items = seed.items();
  items.insert(items.end(), chain.begin(),
               chain.begin() + static_cast<std::ptrdiff_t>(
                                   std::min(i, chain.size())));
  return VertexSet(std::move(items));
}

bool IsClosed(const FiniteGraph& g, const VertexSet& a, const Capacity& cap) {
  return IsClosed(g, a, g.AllVertices(), cap);
}

bool IsClosed(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
              const Capacity& cap) {
  CheckPair(g, a, b);
  if (!IsForestOn(ComponentsWithin(g, b), b)) {
    return reference::IsClosed(g, a, b, cap);
  }
  std::vector<char> in_b(g.order(), 0);
  for (Vertex v : b) in_b[v] = 1;
  for (Vertex v : a) {
    for (Vertex w : g.neighbors(v)) {
      if (in_b[w] && !a.contains(w)) return false;
    }
  }
  return true;
}

bool IsWeaklyClosed(const FiniteGraph& g, const VertexSet& a,
                    const Capacity& cap) {
  return IsWeaklyClosed(g, a, g.AllVertices(), cap);
}

bool IsWeaklyClosed(const FiniteGraph& g, const VertexSet& a,
                    const VertexSet& b, const Capacity& cap) {
  CheckPair(g, a, b);
  const InducedComponents in_b = ComponentsWithin(g, b);
  if (!IsForestOn(in_b, b)) return reference::IsWeaklyClosed(g, a, b, cap);
  return WeaklyClosedOnForest(g, a, in_b);
}

ClosureResult ClosureStar(const FiniteGraph& g, const VertexSet& s) {
  g.CheckSet(s);
  RequireForest(g, "closure");
  ClosureResult out;
  out.seed = s;
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : s) seen[v] = 1;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> frontier;
  auto push_neighbors = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push(w);
      }
    }
  };
  for (Vertex v : s) push_neighbors(v);
  while (!frontier.empty()) {
    const Vertex v = frontier.top();
    frontier.pop();
    out.chain.push_back(v);
    push_neighbors(v);
  }
  out.closure = out.StageBefore(out.chain.size());
  return out;
}

VertexSet WeakClosure(const FiniteGraph& g, const VertexSet& s) {
  g.CheckSet(s);
  RequireForest(g, "weak closure");
  const Components whole = ConnectedComponents(g);
  VertexSet current = s;
  for (;;) {
    const InducedComponents parts = ComponentsWithin(g, current);
    // First vertex of `current` seen in each component of g.
    std::vector<Vertex> anchor(whole.count(), -1);
    std::vector<std::pair<Vertex, Vertex>> joins;
    std::vector<char> joined(whole.count(), 0);
    for (Vertex v : current) {
      const int c = whole.label[v];
      if (anchor[c] < 0) {
        anchor[c] = v;
      } else if (!joined[c] && parts.label[v] != parts.label[anchor[c]]) {
        joined[c] = 1;
        joins.emplace_back(anchor[c], v);
      }
    }
    if (joins.empty()) return current;
    std::vector<Vertex> items = current.items();
    for (auto [from, to] : joins) {
      // BFS parents inside the tree give the unique path.
      std::vector<Vertex> parent(g.order(), -1);
      std::deque<Vertex> queue{from};
      parent[from] = from;
      while (!queue.empty() && parent[to] < 0) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
          if (parent[w] < 0) {
            parent[w] = u;
            queue.push_back(w);
          }
        }
      }
      for (Vertex v = to; v != from; v = parent[v]) items.push_back(v);
    }
    current = VertexSet(std::move(items));
  }
}

long Dimension(const FiniteGraph& g, const VertexSet& s, const Capacity& cap) {
  g.CheckSet(s);
  if (!IsForest(g)) return reference::Dimension(g, s, cap);
  const Components comps = ConnectedComponents(g);
  std::vector<char> met(comps.count(), 0);
  long count = 0;
  for (Vertex v : s) {
    if (!met[comps.label[v]]) {
      met[comps.label[v]] = 1;
      ++count;
    }
  }
  return count;
}

long RelativeDimension(const FiniteGraph& g, const VertexSet& s,
                       const VertexSet& t, const Capacity& cap) {
  return Dimension(g, s.Union(t), cap) - Dimension(g, t, cap);
}

std::string_view ToString(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::kClosed: return "closed";
    case ExtensionKind::kWeaklyClosed: return "weaklyClosed";
    case ExtensionKind::kMinimalPair: return "minimalPair";
    case ExtensionKind::kZeroMinimalPair: return "zeroMinimalPair";
    case ExtensionKind::kWeakMinimalPair: return "weakMinimalPair";
    case ExtensionKind::kIntrinsic: return "intrinsic";
    case ExtensionKind::kZeroIntrinsic: return "zeroIntrinsic";
    case ExtensionKind::kWeakIntrinsic: return "weakIntrinsic";
    case ExtensionKind::kNone: return "none";
  }
  return "none";
}

std::optional<ExtensionKind> ParseExtensionKind(std::string_view text) {
  for (int k = 0; k <= static_cast<int>(ExtensionKind::kNone); ++k) {
    const auto kind = static_cast<ExtensionKind>(k);
    if (ToString(kind) == text) return kind;
  }
  return std::nullopt;
}

namespace {

// B \ A in attachment order (smallest available id first), or empty when
// some vertex of B \ A is not reachable from A inside B.
std::vector<Vertex> AttachmentChain(const FiniteGraph& b, const VertexSet& a) {
  std::vector<char> seen(b.order(), 0);
  for (Vertex v : a) seen[v] = 1;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> frontier;
  auto push = [&](Vertex v) {
    for (Vertex w : b.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        frontier.push(w);
      }
    }
  };
  for (Vertex v : a) push(v);
  std::vector<Vertex> chain;
  while (!frontier.empty()) {
    const Vertex v = frontier.top();
    frontier.pop();
    chain.push_back(v);
    push(v);
  }
  if (chain.size() + a.size() != b.order()) chain.clear();
  return chain;
}

bool WeakMinimal(const FiniteGraph& b, const VertexSet& a,
                 const VertexSet& rest) {
  const InducedComponents in_a = ComponentsWithin(b, a);
  // Components of A adjacent to v.
  auto touched = [&](Vertex v) {
    std::vector<int> labels;
    for (Vertex w : b.neighbors(v)) {
      if (in_a.label[w] >= 0) labels.push_back(in_a.label[w]);
    }
    return labels;
  };
  if (rest.size() == 1) {
    std::vector<int> labels = touched(rest[0]);
    std::sort(labels.begin(), labels.end());
    return std::unique(labels.begin(), labels.end()) - labels.begin() >= 2;
  }
  // B \ A must be a path whose two ends each have one neighbour in A, in
  // different components, and whose inner vertices have none.
  const InducedComponents in_rest = ComponentsWithin(b, rest);
  if (in_rest.count != 1 || in_rest.edges + 1 != rest.size()) return false;
  std::vector<int> ends;
  for (Vertex v : rest) {
    int inner_degree = 0;
    for (Vertex w : b.neighbors(v)) inner_degree += rest.contains(w) ? 1 : 0;
    if (inner_degree > 2) return false;
    const std::vector<int> labels = touched(v);
    if (inner_degree == 1) {
      if (labels.size() != 1) return false;
      ends.push_back(labels[0]);
    } else if (!labels.empty()) {
      return false;
    }
  }
  return ends.size() == 2 && ends[0] != ends[1];
}

}  // namespace

ExtensionReport ClassifyExtension(const FiniteGraph& b, const VertexSet& a) {
  b.CheckSet(a);
  RequireForest(b, "extension classification");
  const VertexSet all = b.AllVertices();
  const VertexSet rest = all.Minus(a);
  ExtensionReport out;
  out.relative_predimension = Predimension(b, all) - Predimension(b, a);

  if (IsClosed(b, a, all)) {
    out.kind = ExtensionKind::kClosed;
    return out;
  }
  if (rest.size() == 1) {
    out.kind = out.relative_predimension == 0 ? ExtensionKind::kZeroMinimalPair
                                              : ExtensionKind::kMinimalPair;
    out.singleton = rest[0];
    out.chain = {rest[0]};
    return out;
  }
  const bool weakly_closed = IsWeaklyClosed(b, a, all);
  std::vector<Vertex> chain = AttachmentChain(b, a);
  if (!weakly_closed && WeakMinimal(b, a, rest)) {
    // Also intrinsic when every vertex attaches; keep the tower then.
    out.kind = ExtensionKind::kWeakMinimalPair;
    out.chain = std::move(chain);
    return out;
  }
  if (!chain.empty()) {
    if (WeakClosure(b, a) == all) {
      out.kind = ExtensionKind::kWeakIntrinsic;
    } else {
      out.kind = out.relative_predimension == 0 ? ExtensionKind::kZeroIntrinsic
                                                : ExtensionKind::kIntrinsic;
    }
    out.chain = std::move(chain);
    return out;
  }
  out.kind = weakly_closed ? ExtensionKind::kWeaklyClosed : ExtensionKind::kNone;
  return out;
}

std::vector<Vertex> UniquePathTo(const FiniteGraph& g, const VertexSet& a,
                                 Vertex b, bool check_precondition) {
  g.CheckSet(a);
  g.CheckVertex(b);
  RequireForest(g, "unique path");
  if (check_precondition && !IsWeaklyClosed(g, a)) {
    throw PreconditionError("A is not weakly closed in the graph");
  }
  if (a.contains(b)) return {b};
  // BFS from b that stops at vertices of A.
  std::vector<Vertex> parent(g.order(), -1);
  std::deque<Vertex> queue{b};
  parent[b] = b;
  std::vector<Vertex> hits;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] >= 0) continue;
      parent[w] = u;
      if (a.contains(w)) {
        hits.push_back(w);
      } else {
        queue.push_back(w);
      }
    }
  }
  if (hits.empty()) {
    throw PreconditionError("no path from '" + g.id(b) + "' to A");
  }
  if (hits.size() > 1) {
    throw PreconditionError("path from '" + g.id(b) + "' to A is not unique");
  }
  std::vector<Vertex> path;
  for (Vertex v = hits[0]; v != b; v = parent[v]) path.push_back(v);
  path.push_back(b);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace gfl
