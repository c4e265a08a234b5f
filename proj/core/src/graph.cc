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

#include "gfl/graph.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "gfl/errors.h"

namespace gfl {

VertexSet::VertexSet(std::initializer_list<Vertex> vs)
    : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::Range(Vertex n) {
  VertexSet s;
  s.items_.resize(n);
  std::iota(s.items_.begin(), s.items_.end(), 0);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

bool VertexSet::IsSubsetOf(const VertexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

bool VertexSet::Intersects(const VertexSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

VertexSet VertexSet::Union(const VertexSet& other) const {
  VertexSet out;
  out.items_.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::Intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::Minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::With(Vertex v) const {
  VertexSet out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), v);
  if (it == out.items_.end() || *it != v) out.items_.insert(it, v);
  return out;
}

namespace {

// Sorts ids and returns, for each original position, its sorted index.
std::vector<Vertex> SortIds(std::vector<std::string>& ids) {
  std::vector<Vertex> order(ids.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return ids[a] < ids[b]; });
  std::vector<std::string> sorted(ids.size());
  std::vector<Vertex> position_of(ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted[i] = std::move(ids[order[i]]);
    position_of[order[i]] = static_cast<Vertex>(i);
  }
  ids = std::move(sorted);
  return position_of;
}

}  // namespace

FiniteGraph FiniteGraph::Build(
    std::vector<std::string> ids,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  {
    std::map<std::string_view, std::size_t> seen;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto [it, inserted] = seen.emplace(ids[i], i);
      if (!inserted) {
        throw MalformedGraphError(
            "vertices[" + std::to_string(i) + "]",
            "duplicate vertex '" + ids[i] + "' (first declared at vertices[" +
                std::to_string(it->second) + "])");
      }
    }
  }
  std::vector<std::string> sorted = ids;
  SortIds(sorted);
  auto lookup = [&](const std::string& id) -> std::optional<Vertex> {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
    if (it == sorted.end() || *it != id) return std::nullopt;
    return static_cast<Vertex>(it - sorted.begin());
  };

  std::map<Edge, std::size_t> seen_edges;
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string pos = "edges[" + std::to_string(i) + "]";
    auto u = lookup(edges[i].first);
    auto v = lookup(edges[i].second);
    if (!u) throw MalformedGraphError(pos, "undeclared vertex '" + edges[i].first + "'");
    if (!v) throw MalformedGraphError(pos, "undeclared vertex '" + edges[i].second + "'");
    if (*u == *v) {
      throw MalformedGraphError(pos, "self-loop on '" + edges[i].first + "'");
    }
    Edge e = std::minmax(*u, *v);
    auto [it, inserted] = seen_edges.emplace(e, i);
    if (!inserted) {
      throw MalformedGraphError(pos, "duplicate edge {" + edges[i].first +
                                         ", " + edges[i].second +
                                         "} (first at edges[" +
                                         std::to_string(it->second) + "])");
    }
    indexed.push_back(e);
  }
  return FromIndexedEdges(std::move(sorted), indexed);
}

FiniteGraph FiniteGraph::FromIndexedEdges(std::vector<std::string> ids,
                                          const std::vector<Edge>& edges) {
  FiniteGraph g;
  const std::vector<Vertex> pos = SortIds(ids);
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i] == ids[i - 1]) {
      throw MalformedGraphError("", "duplicate vertex '" + ids[i] + "'");
    }
  }
  g.ids_ = std::move(ids);
  g.adjacency_.resize(g.ids_.size());
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= pos.size() ||
        static_cast<std::size_t>(b) >= pos.size()) {
      throw MalformedGraphError("", "edge endpoint out of range");
    }
    if (a == b) throw MalformedGraphError("", "self-loop");
    g.edges_.push_back(std::minmax(pos[a], pos[b]));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end()) {
    throw MalformedGraphError("", "duplicate edge");
  }
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

std::optional<Vertex> FiniteGraph::Find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id,
                             [](const std::string& a, std::string_view b) {
                               return std::string_view(a) < b;
                             });
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Vertex>(it - ids_.begin());
}

Vertex FiniteGraph::IndexOf(std::string_view id) const {
  auto v = Find(id);
  if (!v) throw UnknownVertexError(std::string(id));
  return *v;
}

void FiniteGraph::CheckVertex(Vertex v) const {
  if (!Contains(v)) throw UnknownVertexError("#" + std::to_string(v));
}

void FiniteGraph::CheckSet(const VertexSet& s) const {
  for (Vertex v : s) CheckVertex(v);
}

bool FiniteGraph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

VertexSet FiniteGraph::Set(const std::vector<std::string>& ids) const {
  std::vector<Vertex> vs;
  vs.reserve(ids.size());
  for (const auto& id : ids) vs.push_back(IndexOf(id));
  return VertexSet(std::move(vs));
}

std::vector<std::string> FiniteGraph::Ids(const VertexSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(ids_[v]);
  return out;
}

std::size_t FiniteGraph::EdgesWithin(const VertexSet& s) const {
  std::size_t count = 0;
  for (Vertex u : s) {
    for (Vertex v : adjacency_[u]) {
      if (u < v && s.contains(v)) ++count;
    }
  }
  return count;
}

FiniteGraph FiniteGraph::Induced(const VertexSet& s) const {
  CheckSet(s);
  FiniteGraph g;
  g.ids_.reserve(s.size());
  for (Vertex v : s) g.ids_.push_back(ids_[v]);
  g.adjacency_.resize(s.size());
  // Indices of s are already in id order, so positions in s are the new
  // indices.
  auto new_index = [&](Vertex v) {
    return static_cast<Vertex>(
        std::lower_bound(s.begin(), s.end(), v) - s.begin());
  };
  for (const auto& [u, v] : edges_) {
    if (s.contains(u) && s.contains(v)) {
      g.edges_.emplace_back(new_index(u), new_index(v));
    }
  }
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

FiniteGraph FiniteGraph::Prefixed(std::string_view prefix) const {
  std::vector<std::string> ids;
  ids.reserve(ids_.size());
  for (const auto& id : ids_) ids.push_back(std::string(prefix) + id);
  return FromIndexedEdges(std::move(ids), edges_);
}

ClassIndex ClassIndex::Finite(int n) {
  if (n < 0) throw PreconditionError("class index must be >= 0");
  return ClassIndex(n);
}

ClassIndex ClassIndex::Parse(std::string_view text) {
  if (text == "omega" || text == "w" || text == "ω" || text == "inf") {
    return Omega();
  }
  if (text.empty() || text.size() > 6) {
    throw PreconditionError("invalid class index '" + std::string(text) + "'");
  }
  int n = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw PreconditionError("invalid class index '" + std::string(text) +
                              "'");
    }
    n = n * 10 + (c - '0');
  }
  return Finite(n);
}

int ClassIndex::value() const {
  if (is_omega()) throw PreconditionError("class index is omega");
  return value_;
}

std::string ClassIndex::ToString() const {
  return is_omega() ? "omega" : std::to_string(value_);
}

std::string MakeId(std::string_view prefix, std::size_t index,
                   std::size_t width) {
  std::string digits = std::to_string(index);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return std::string(prefix) + digits;
}

}  // namespace gfl
