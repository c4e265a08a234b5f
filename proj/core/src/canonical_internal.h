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

#ifndef GFL_SRC_CANONICAL_INTERNAL_H_
#define GFL_SRC_CANONICAL_INTERNAL_H_

#include <span>
#include <string>
#include <vector>

#include "gfl/graph.h"

namespace gfl::internal {

// Canonical code of one tree of g given as its sorted vertex list. The
// component must be a whole connected component and acyclic.
std::string TreeCode(const FiniteGraph& g, std::span<const Vertex> component,
                     std::span<const Vertex> marks);

// Canonical code of a union of whole components of g.
std::string ComponentsCode(const FiniteGraph& g,
                           std::span<const std::vector<Vertex>> components,
                           std::span<const Vertex> marks);

}  // namespace gfl::internal

#endif  // GFL_SRC_CANONICAL_INTERNAL_H_
