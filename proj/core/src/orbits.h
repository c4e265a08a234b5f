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

#ifndef GFL_SRC_ORBITS_H_
#define GFL_SRC_ORBITS_H_

#include <span>
#include <string>
#include <vector>

#include "gfl/forest.h"
#include "gfl/graph.h"

namespace gfl::internal {

// Orbit bookkeeping for a forest under automorphisms that fix a mark
// sequence. Two vertices land in the same class only when an automorphism
// fixing every mark maps one to the other, so searching one representative
// per class is exhaustive for any isomorphism-invariant question.
class ForestOrbits {
 public:
  // `g` must outlive this object and be acyclic.
  explicit ForestOrbits(const FiniteGraph& g);

  const Components& components() const { return comps_; }
  const std::string& graph_code() const { return graph_code_; }

  // Sorted representatives, one per class, covering every vertex.
  std::vector<Vertex> Representatives(std::span<const Vertex> marks) const;

  // Code of v's rooted component type; empty for components too large to
  // classify. Equal non-empty codes mean an automorphism maps one to the
  // other when both lie in unmarked components.
  const std::string& VertexCode(Vertex v) const {
    return class_codes_[vertex_class_[v]];
  }

  // Canonical code of the marked components together with the marks. Two
  // positions of the same forest with equal keys are isomorphic.
  std::string PositionKey(std::span<const Vertex> marks) const;

 private:
  std::vector<int> MarkedComponents(std::span<const Vertex> marks) const;

  const FiniteGraph& g_;
  Components comps_;
  std::string graph_code_;
  std::vector<int> vertex_class_;
  std::vector<std::vector<Vertex>> class_members_;
  std::vector<std::string> class_codes_;
};

}  // namespace gfl::internal

#endif  // GFL_SRC_ORBITS_H_
