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

// Reading and writing the graph JSON interchange format:
//
//   {"vertices": ["a", "b", ...], "edges": [["a", "b"], ...]}
//
// Order-insensitive. Duplicate vertices or edges and self-loops are rejected
// with an error naming the offending element.

#ifndef GFL_GRAPH_JSON_H_
#define GFL_GRAPH_JSON_H_

#include <string>
#include <string_view>

#include "gfl/graph.h"

namespace gfl {

FiniteGraph ParseGraphJson(std::string_view text);
FiniteGraph ReadGraphFile(const std::string& path);

// Deterministic serialization: vertices and edges in lexicographic id order.
std::string GraphToJson(const FiniteGraph& g, int indent = -1);

}  // namespace gfl

#endif  // GFL_GRAPH_JSON_H_
