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

#include "gfl/forest.h"

#include <algorithm>
#include <deque>
#include <functional>

#include "gfl/errors.h"

namespace gfl {

Components ConnectedComponents(const FiniteGraph& g) {
  Components c;
  c.label.assign(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    if (c.label[s] >= 0) continue;
    const int id = static_cast<int>(c.members.size());
    c.members.emplace_back();
    auto& members = c.members.back();
    c.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (c.label[w] < 0) {
          c.label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return c;
}

bool IsForest(const FiniteGraph& g) {
  return g.size() + ConnectedComponents(g).count() == g.order();
}

std::optional<std::vector<Vertex>> FindCycle(const FiniteGraph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, -1);
  for (Vertex s = 0; s < static_cast<Vertex>(n); ++s) {
    if (depth[s] >= 0) continue;
    depth[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (w == parent[v]) continue;
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          stack.push_back(w);
          continue;
        }
        // Non-tree edge v-w closes a cycle through the lowest common ancestor.
        std::vector<Vertex> left{v}, right{w};
        Vertex a = v, b = w;
        while (depth[a] > depth[b]) left.push_back(a = parent[a]);
        while (depth[b] > depth[a]) right.push_back(b = parent[b]);
        while (a != b) {
          left.push_back(a = parent[a]);
          right.push_back(b = parent[b]);
        }
        right.pop_back();  // the common ancestor is already in `left`
        std::reverse(right.begin(), right.end());
        left.insert(left.end(), right.begin(), right.end());
        return left;
      }
    }
  }
  return std::nullopt;
}

long Predimension(const FiniteGraph& g, const VertexSet& s) {
  g.CheckSet(s);
  return static_cast<long>(s.size()) - static_cast<long>(g.EdgesWithin(s));
}

namespace {

// Simple path of `length` edges starting at x, avoiding x; in a forest the
// DFS never revisits, in general graphs `on_path` keeps paths simple.
bool FindPathFrom(const FiniteGraph& g, Vertex x, int length,
                  std::vector<Vertex>& path, std::vector<char>& on_path) {
  if (static_cast<int>(path.size()) - 1 == length) return true;
  const Vertex v = path.back();
  for (Vertex w : g.neighbors(v)) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    path.push_back(w);
    if (FindPathFrom(g, x, length, path, on_path)) return true;
    path.pop_back();
    on_path[w] = 0;
  }
  return false;
}

}  // namespace

ClassReport ClassMembership(const FiniteGraph& g, ClassIndex alpha) {
  ClassReport report;
  if (auto cycle = FindCycle(g)) {
    report.member = false;
    report.violation =
        ClassViolation{ClassViolation::Kind::kCycle, std::move(*cycle), 0};
    return report;
  }
  if (alpha.is_omega()) return report;
  const int n = alpha.value();
  for (Vertex x = 0; x < static_cast<Vertex>(g.order()); ++x) {
    if (n == 0) {
      if (g.degree(x) > 3) {
        report.member = false;
        report.violation = ClassViolation{ClassViolation::Kind::kOverDegree,
                                          {x}, g.degree(x)};
        return report;
      }
      continue;
    }
    if (g.degree(x) < n + 2) continue;
    std::vector<Vertex> path{x};
    std::vector<char> on_path(g.order(), 0);
    on_path[x] = 1;
    if (FindPathFrom(g, x, 2 * n, path, on_path)) {
      report.member = false;
      report.violation = ClassViolation{ClassViolation::Kind::kLongPath,
                                        std::move(path), g.degree(x)};
      return report;
    }
  }
  return report;
}

std::vector<Distance> DistancesFrom(const FiniteGraph& g, Vertex a) {
  g.CheckVertex(a);
  std::vector<Distance> dist(g.order(), kInfiniteDistance);
  std::deque<Vertex> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance Dist(const FiniteGraph& g, Vertex a, Vertex b) {
  g.CheckVertex(b);
  return DistancesFrom(g, a)[b];
}

RootedGraph Neighborhood(const FiniteGraph& g, Vertex a, int r) {
  if (r < 0) throw PreconditionError("neighbourhood radius must be >= 0");
  const auto dist = DistancesFrom(g, a);
  std::vector<Vertex> ball;
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (dist[v] <= r) ball.push_back(v);
  }
  RootedGraph out;
  out.graph = g.Induced(VertexSet(std::move(ball)));
  out.root = out.graph.IndexOf(g.id(a));
  return out;
}

namespace {

// Backtracking search for m branch vertices joined pairwise by internally
// disjoint paths with at most r internal vertices each.
class SubdividedCliqueSearch {
 public:
  SubdividedCliqueSearch(const FiniteGraph& g, int m, int r)
      : g_(g), m_(m), max_edges_(r + 1), used_(g.order(), 0) {
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) pairs_.emplace_back(i, j);
    }
  }

  bool Run() { return ChooseBranch(0, 0); }

 private:
  bool ChooseBranch(int chosen, Vertex from) {
    if (chosen == m_) return ConnectPair(0);
    for (Vertex v = from; v < static_cast<Vertex>(g_.order()); ++v) {
      if (g_.degree(v) < m_ - 1) continue;
      branch_.push_back(v);
      used_[v] = 1;
      if (ChooseBranch(chosen + 1, v + 1)) return true;
      used_[v] = 0;
      branch_.pop_back();
    }
    return false;
  }

  bool ConnectPair(std::size_t index) {
    if (index == pairs_.size()) return true;
    const Vertex source = branch_[pairs_[index].first];
    const Vertex target = branch_[pairs_[index].second];
    return ExtendPath(index, source, target, 0);
  }

  bool ExtendPath(std::size_t index, Vertex at, Vertex target, int edges) {
    if (edges == max_edges_) return false;
    for (Vertex w : g_.neighbors(at)) {
      if (w == target) {
        if (ConnectPair(index + 1)) return true;
        continue;
      }
      if (used_[w]) continue;
      if (edges + 1 == max_edges_) continue;  // no room left to reach target
      used_[w] = 1;
      if (ExtendPath(index, w, target, edges + 1)) return true;
      used_[w] = 0;
    }
    return false;
  }

  const FiniteGraph& g_;
  int m_;
  int max_edges_;
  std::vector<char> used_;
  std::vector<Vertex> branch_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace

bool ContainsSubdividedClique(const FiniteGraph& g, int m, int r,
                              const Capacity& cap) {
  if (m < 2) throw PreconditionError("subdivided clique needs m >= 2");
  if (r < 0) throw PreconditionError("subdivision bound r must be >= 0");
  if (g.order() > cap.subgraph_vertices) {
    throw CapacityError("subgraph_vertices", g.order(), cap.subgraph_vertices);
  }
  return SubdividedCliqueSearch(g, m, r).Run();
}

FiniteGraph DisjointUnion(std::span<const FiniteGraph> parts,
                          std::string_view prefix) {
  const std::size_t width =
      std::to_string(parts.empty() ? 0 : parts.size() - 1).size();
  std::vector<std::string> ids;
  std::vector<FiniteGraph::Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string p = MakeId(prefix, i, width) + ".";
    const Vertex offset = static_cast<Vertex>(ids.size());
    for (const auto& id : parts[i].ids()) ids.push_back(p + id);
    for (const auto& [u, v] : parts[i].edges()) {
      edges.emplace_back(u + offset, v + offset);
    }
  }
  return FiniteGraph::FromIndexedEdges(std::move(ids), edges);
}

}  // namespace gfl
