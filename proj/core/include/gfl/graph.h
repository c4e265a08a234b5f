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

// Finite simple graphs with opaque string vertex ids. Every structure the
// library reasons about is a FiniteGraph; closure calculus, games and
// formulas all address vertices through the dense indices handed out here.

#ifndef GFL_GRAPH_H_
#define GFL_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gfl {

// Dense index of a vertex inside one FiniteGraph. Indices follow the
// lexicographic order of the vertex ids.
using Vertex = std::int32_t;

// A set of vertices of one ambient graph, kept sorted and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet Range(Vertex n);  // {0, ..., n-1}

  bool contains(Vertex v) const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vertex>& items() const { return items_; }

  bool IsSubsetOf(const VertexSet& other) const;
  bool Intersects(const VertexSet& other) const;
  VertexSet Union(const VertexSet& other) const;
  VertexSet Intersect(const VertexSet& other) const;
  VertexSet Minus(const VertexSet& other) const;
  VertexSet With(Vertex v) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

// Immutable finite simple graph: anti-reflexive, symmetric, each edge
// stored once as a normalized (u < v) pair.
class FiniteGraph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  FiniteGraph() = default;

  // Validating constructor. Throws MalformedGraphError on duplicate vertex
  // ids, self-loops, duplicate edges or undeclared endpoints; the error's
  // position names the offending list element.
  static FiniteGraph Build(
      std::vector<std::string> ids,
      const std::vector<std::pair<std::string, std::string>>& edges);

  // Graph on vertices named by `ids` (need not be sorted) with edges given as
  // positions into `ids`.
  static FiniteGraph FromIndexedEdges(std::vector<std::string> ids,
                                      const std::vector<Edge>& edges);

  std::size_t order() const { return ids_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return ids_.empty(); }

  const std::string& id(Vertex v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<Vertex> Find(std::string_view id) const;
  Vertex IndexOf(std::string_view id) const;  // throws UnknownVertexError
  bool Contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < ids_.size();
  }
  void CheckVertex(Vertex v) const;  // throws UnknownVertexError
  void CheckSet(const VertexSet& s) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet AllVertices() const { return VertexSet::Range(order()); }
  VertexSet Set(const std::vector<std::string>& ids) const;
  std::vector<std::string> Ids(const VertexSet& s) const;

  // Edges with both endpoints in `s`.
  std::size_t EdgesWithin(const VertexSet& s) const;

  // Induced subgraph on `s`; vertex ids are preserved.
  FiniteGraph Induced(const VertexSet& s) const;

  // Same graph with every id replaced by prefix + id.
  FiniteGraph Prefixed(std::string_view prefix) const;

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
    return a.ids_ == b.ids_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// Selects one of the classes K_0, K_1, ..., K_omega.
class ClassIndex {
 public:
  static ClassIndex Omega() { return ClassIndex(-1); }
  static ClassIndex Finite(int n);
  // Accepts a decimal number or one of "omega", "w", "ω".
  static ClassIndex Parse(std::string_view text);

  bool is_omega() const { return value_ < 0; }
  int value() const;  // throws PreconditionError for omega
  std::string ToString() const;

  friend bool operator==(ClassIndex, ClassIndex) = default;

 private:
  explicit ClassIndex(int v) : value_(v) {}
  int value_;
};

// Id helper for generated structures: prefix + zero-padded index.
std::string MakeId(std::string_view prefix, std::size_t index,
                   std::size_t width);

}  // namespace gfl

#endif  // GFL_GRAPH_H_
