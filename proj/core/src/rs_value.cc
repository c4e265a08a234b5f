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

#include "gfl/rs_value.h"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "gfl/errors.h"
#include "gfl/forest.h"

namespace gfl {

struct RSValue::Node {
  int r;
  int s;
  int count;
  std::vector<std::pair<RSValue, int>> entries;
  std::string text;
};

class RSValueFactory {
 public:
  static RSValueFactory& Get() {
    static RSValueFactory* factory = new RSValueFactory;
    return *factory;
  }

  RSValue Leaf(int s, int count) {
    return Intern(1, s, count, {});
  }

  RSValue Map(int r, int s, std::vector<std::pair<RSValue, int>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return Intern(r, s, 0, std::move(entries));
  }

 private:
  static std::string CountText(int c) {
    return c == RSValue::kMany ? "inf" : std::to_string(c);
  }

  RSValue Intern(int r, int s, int count,
                 std::vector<std::pair<RSValue, int>> entries) {
    std::string text;
    if (r == 1) {
      text = CountText(count);
    } else {
      text = "{";
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) text += ',';
        text += entries[i].first.ToString() + ":" + CountText(entries[i].second);
      }
      text += "}";
    }
    const std::string key =
        std::to_string(r) + "/" + std::to_string(s) + "/" + text;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key);
    if (it == table_.end()) {
      auto node = std::make_unique<RSValue::Node>(
          RSValue::Node{r, s, count, std::move(entries), std::move(text)});
      it = table_.emplace(key, std::move(node)).first;
    }
    return RSValue(it->second.get());
  }

  std::mutex mu_;
  std::map<std::string, std::unique_ptr<RSValue::Node>> table_;
};

int RSValue::r() const { return node_->r; }
int RSValue::s() const { return node_->s; }
int RSValue::count() const { return node_->count; }
const std::vector<std::pair<RSValue, int>>& RSValue::entries() const {
  return node_->entries;
}
const std::string& RSValue::ToString() const { return node_->text; }

int RSValue::CountOf(const RSValue& sigma) const {
  for (const auto& [value, c] : node_->entries) {
    if (value == sigma) return c;
  }
  return 0;
}

bool operator<(const RSValue& a, const RSValue& b) {
  if (a.r() != b.r()) return a.r() < b.r();
  if (a.s() != b.s()) return a.s() < b.s();
  return a.ToString() < b.ToString();
}

RootedTree RootedTree::Make(FiniteGraph graph, Vertex root) {
  graph.CheckVertex(root);
  if (!IsForest(graph)) throw NotAForestError("rooted tree has a cycle");
  if (ConnectedComponents(graph).count() != 1) {
    throw PreconditionError("rooted tree is not connected");
  }
  return RootedTree(std::move(graph), root);
}

RootedTree RootedTree::ComponentOf(const FiniteGraph& forest, Vertex v) {
  forest.CheckVertex(v);
  const Components comps = ConnectedComponents(forest);
  const auto& members = comps.members[comps.label[v]];
  const VertexSet set(members);
  const Vertex root = static_cast<Vertex>(
      std::lower_bound(members.begin(), members.end(), v) - members.begin());
  return Make(forest.Induced(set), root);
}

namespace {

int Cap(std::size_t n, int s) {
  return n <= static_cast<std::size_t>(s) ? static_cast<int>(n) : RSValue::kMany;
}

// Values of every vertex of the forest oriented away from `roots`, one
// BFS order per component.
std::vector<RSValue> ValuesOriented(const FiniteGraph& g,
                                    const std::vector<Vertex>& roots, int r,
                                    int s) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  if (s < 0) throw PreconditionError("s must be non-negative");
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n, -1), order;
  std::vector<char> seen(n, 0);
  for (Vertex root : roots) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
  }
  RSValueFactory& factory = RSValueFactory::Get();
  std::vector<RSValue> current;
  current.reserve(n);
  for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
    std::size_t children = 0;
    for (Vertex w : g.neighbors(v)) children += parent[w] == v ? 1 : 0;
    current.push_back(factory.Leaf(s, Cap(children, s)));
  }
  for (int level = 2; level <= r; ++level) {
    std::vector<RSValue> next;
    next.reserve(n);
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
      std::map<std::string, std::pair<RSValue, std::size_t>> tally;
      for (Vertex w : g.neighbors(v)) {
        if (parent[w] != v) continue;
        auto it = tally.try_emplace(current[w].ToString(), current[w], 0).first;
        ++it->second.second;
      }
      std::vector<std::pair<RSValue, int>> entries;
      for (const auto& [text, item] : tally) {
        const int c = Cap(item.second, s);
        if (c != 0) entries.emplace_back(item.first, c);
      }
      next.push_back(factory.Map(level, s, std::move(entries)));
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

RSValue RsValue(const RootedTree& tree, int r, int s) {
  return ValuesOriented(tree.graph(), {tree.root()}, r, s)[tree.root()];
}

std::vector<RSValue> RsValuesOfForest(const FiniteGraph& forest, int r,
                                      int s) {
  if (!IsForest(forest)) throw NotAForestError("graph has a cycle");
  std::vector<std::optional<RSValue>> values(forest.order());
  const Components comps = ConnectedComponents(forest);
  for (const auto& members : comps.members) {
    const FiniteGraph tree = forest.Induced(VertexSet(members));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Vertex local = static_cast<Vertex>(i);
      values[members[i]] = ValuesOriented(tree, {local}, r, s)[local];
    }
  }
  std::vector<RSValue> out;
  out.reserve(forest.order());
  for (const auto& v : values) out.push_back(*v);
  return out;
}

}  // namespace gfl
