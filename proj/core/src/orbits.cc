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

#include "orbits.h"

#include <algorithm>
#include <map>

#include "canonical_internal.h"
#include "gfl/errors.h"

namespace gfl::internal {

namespace {

// Components above this size keep singleton classes: computing a code per
// vertex is quadratic in the component size.
constexpr std::size_t kClassComponentLimit = 512;
// Marked components above this total size are searched without pruning.
constexpr std::size_t kMarkedLimit = 64;

}  // namespace

ForestOrbits::ForestOrbits(const FiniteGraph& g)
    : g_(g), comps_(ConnectedComponents(g)) {
  if (g.size() + comps_.count() != g.order()) {
    throw NotAForestError("orbit computation requires an acyclic graph");
  }
  graph_code_ = ComponentsCode(g, comps_.members, {});
  vertex_class_.assign(g.order(), -1);
  std::map<std::string, int> class_of_code;
  for (const auto& comp : comps_.members) {
    if (comp.size() > kClassComponentLimit) {
      for (Vertex v : comp) {
        vertex_class_[v] = static_cast<int>(class_members_.size());
        class_members_.push_back({v});
        class_codes_.emplace_back();
      }
      continue;
    }
    for (Vertex v : comp) {
      const Vertex mark[] = {v};
      std::string code = TreeCode(g, comp, mark);
      auto [it, inserted] = class_of_code.emplace(
          code, static_cast<int>(class_members_.size()));
      if (inserted) {
        class_members_.emplace_back();
        class_codes_.push_back(std::move(code));
      }
      vertex_class_[v] = it->second;
      class_members_[it->second].push_back(v);
    }
  }
  for (auto& members : class_members_) std::sort(members.begin(), members.end());
}

std::vector<int> ForestOrbits::MarkedComponents(
    std::span<const Vertex> marks) const {
  std::vector<int> marked;
  for (Vertex m : marks) marked.push_back(comps_.label[m]);
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  return marked;
}

std::vector<Vertex> ForestOrbits::Representatives(
    std::span<const Vertex> marks) const {
  const std::vector<int> marked = MarkedComponents(marks);
  auto is_marked = [&](Vertex v) {
    return std::binary_search(marked.begin(), marked.end(), comps_.label[v]);
  };
  std::vector<Vertex> reps;
  for (const auto& members : class_members_) {
    for (Vertex v : members) {
      if (!is_marked(v)) {
        reps.push_back(v);
        break;
      }
    }
  }

  std::vector<std::vector<Vertex>> marked_lists;
  std::size_t marked_size = 0;
  for (int c : marked) {
    marked_lists.push_back(comps_.members[c]);
    marked_size += comps_.members[c].size();
  }
  if (marked_size > kMarkedLimit) {
    for (const auto& list : marked_lists) {
      reps.insert(reps.end(), list.begin(), list.end());
    }
  } else {
    std::vector<Vertex> extended(marks.begin(), marks.end());
    extended.push_back(0);
    std::map<std::string, Vertex> seen;
    for (const auto& list : marked_lists) {
      for (Vertex v : list) {
        extended.back() = v;
        seen.emplace(ComponentsCode(g_, marked_lists, extended), v);
      }
    }
    for (const auto& [code, v] : seen) reps.push_back(v);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::string ForestOrbits::PositionKey(std::span<const Vertex> marks) const {
  const std::vector<int> marked = MarkedComponents(marks);
  std::vector<std::vector<Vertex>> lists;
  lists.reserve(marked.size());
  for (int c : marked) lists.push_back(comps_.members[c]);
  return ComponentsCode(g_, lists, marks);
}

}  // namespace gfl::internal
