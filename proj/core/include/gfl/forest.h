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

// Graph-level operations behind the class calculus: predimension, class
// membership for K_alpha, distances, neighbourhoods, subdivided cliques,
// canonical codes of marked forests and isomorphism-free class enumeration.

#ifndef GFL_FOREST_H_
#define GFL_FOREST_H_

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfl/capacity.h"
#include "gfl/graph.h"

namespace gfl {

struct Components {
  std::vector<int> label;                   // component index per vertex
  std::vector<std::vector<Vertex>> members;  // sorted, by smallest vertex
  std::size_t count() const { return members.size(); }
};

Components ConnectedComponents(const FiniteGraph& g);

// Acyclic, i.e. a member of K_omega.
bool IsForest(const FiniteGraph& g);

// Vertices of some cycle in traversal order, or nullopt for forests.
std::optional<std::vector<Vertex>> FindCycle(const FiniteGraph& g);

// |S| minus the number of edges inside S.
long Predimension(const FiniteGraph& g, const VertexSet& s);

struct ClassViolation {
  enum class Kind { kCycle, kOverDegree, kLongPath };
  Kind kind;
  // kCycle: the cycle. kOverDegree: the vertex. kLongPath: x followed by the
  // 2n path vertices.
  std::vector<Vertex> vertices;
  int degree = 0;  // degree of the offending vertex (kOverDegree, kLongPath)
};

struct ClassReport {
  bool member = true;
  std::optional<ClassViolation> violation;
};

// K_omega: acyclic. K_0: additionally max degree <= 3. K_n (n >= 1): no
// vertex x with deg(x) >= n + 2 starts a simple path of 2n edges whose
// vertices are distinct from each other and from x.
ClassReport ClassMembership(const FiniteGraph& g, ClassIndex alpha);
inline bool InClass(const FiniteGraph& g, ClassIndex alpha) {
  return ClassMembership(g, alpha).member;
}

using Distance = int;
inline constexpr Distance kInfiniteDistance = std::numeric_limits<int>::max();

Distance Dist(const FiniteGraph& g, Vertex a, Vertex b);
// BFS distances from `a`; unreachable vertices get kInfiniteDistance.
std::vector<Distance> DistancesFrom(const FiniteGraph& g, Vertex a);

struct RootedGraph {
  FiniteGraph graph;
  Vertex root = 0;
};

// Induced subgraph on {b : dist(a, b) <= r}, rooted at a.
RootedGraph Neighborhood(const FiniteGraph& g, Vertex a, int r);

// True iff some member of C^r_m (K_m with every edge subdivided by at most r
// new vertices) is a subgraph, not necessarily induced, of g.
bool ContainsSubdividedClique(const FiniteGraph& g, int m, int r,
                              const Capacity& cap = {});

// Canonical form of a forest with an ordered mark sequence: equal codes iff
// there is an isomorphism carrying marks[i] to marks'[i] for every i.
// Throws NotAForestError on cycles.
std::string CanonicalCode(const FiniteGraph& g,
                          std::span<const Vertex> marks = {});

// All members of K_alpha with at most max_size vertices, one per
// isomorphism class, ordered by (size, canonical code). Includes the empty
// graph. Vertex ids are "a", "b", ... in canonical order.
std::vector<FiniteGraph> EnumerateClass(ClassIndex alpha, std::size_t max_size,
                                        const Capacity& cap = {});

// The connected, non-empty members of K_alpha with at most max_size
// vertices, same order and naming as EnumerateClass.
std::vector<FiniteGraph> EnumerateTrees(ClassIndex alpha, std::size_t max_size,
                                        const Capacity& cap = {});

// Disjoint union; vertex ids are prefixed by "<prefix><index>." per part.
FiniteGraph DisjointUnion(std::span<const FiniteGraph> parts,
                          std::string_view prefix = "p");

}  // namespace gfl

#endif  // GFL_FOREST_H_
