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

// (r,s)-values of rooted trees: a radius-r census of the tree below the
// root in which every count above s is read as "many".

#ifndef GFL_RS_VALUE_H_
#define GFL_RS_VALUE_H_

#include <string>
#include <utility>
#include <vector>

#include "gfl/graph.h"

namespace gfl {

// A tree with a designated root. Make() rejects disconnected or cyclic
// graphs with PreconditionError / NotAForestError.
class RootedTree {
 public:
  static RootedTree Make(FiniteGraph graph, Vertex root);
  // The component of `v` in a forest, rooted at v.
  static RootedTree ComponentOf(const FiniteGraph& forest, Vertex v);

  const FiniteGraph& graph() const { return graph_; }
  Vertex root() const { return root_; }

 private:
  RootedTree(FiniteGraph g, Vertex root) : graph_(std::move(g)), root_(root) {}
  FiniteGraph graph_;
  Vertex root_;
};

// An interned (r,s)-value. Equal values are the same object, so equality
// is a pointer comparison. Safe to create from several threads.
class RSValue {
 public:
  static constexpr int kMany = -1;  // the capped count "infinity"

  int r() const;
  int s() const;
  // r = 1: the capped number of children.
  int count() const;
  // r > 1: the realized child values with their capped counts (kMany or
  // 1..s), in canonical order. Values absent here count 0.
  const std::vector<std::pair<RSValue, int>>& entries() const;
  int CountOf(const RSValue& sigma) const;

  // Canonical text, e.g. "2", "inf", "{0:2}", "{{0:1}:inf}".
  const std::string& ToString() const;

  friend bool operator==(const RSValue& a, const RSValue& b) {
    return a.node_ == b.node_;
  }
  // Canonical structural order (by text).
  friend bool operator<(const RSValue& a, const RSValue& b);

  struct Node;

 private:
  friend class RSValueFactory;
  explicit RSValue(const Node* node) : node_(node) {}
  const Node* node_;
};

// val_(r,s) of the tree. r >= 1, s >= 0 (PreconditionError otherwise).
RSValue RsValue(const RootedTree& tree, int r, int s);

// Values of every vertex of a forest, each vertex rooting its component.
std::vector<RSValue> RsValuesOfForest(const FiniteGraph& forest, int r, int s);

}  // namespace gfl

#endif  // GFL_RS_VALUE_H_
