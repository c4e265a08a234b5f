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

#include "gfl/reference.h"

#include <cstdint>
#include <functional>
#include <limits>

#include "gfl/errors.h"
#include "gfl/forest.h"

namespace gfl::reference {

namespace {

void CheckSubset(const FiniteGraph& g, const VertexSet& a, const VertexSet& b) {
  g.CheckSet(a);
  g.CheckSet(b);
  if (!a.IsSubsetOf(b)) throw PreconditionError("A is not a subset of B");
}

// Calls f(C) for every C with base <= C <= base u free, stopping early when
// f returns false. Returns false iff stopped.
bool ForEachBetween(const FiniteGraph& g, const VertexSet& base,
                    const VertexSet& free, const Capacity& cap,
                    const std::function<bool(const VertexSet&)>& f) {
  (void)g;
  if (free.size() > cap.brute_force_vertices || free.size() >= 63) {
    throw CapacityError("brute", free.size(), cap.brute_force_vertices);
  }
  const std::uint64_t limit = std::uint64_t{1} << free.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<Vertex> items = base.items();
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (mask >> i & 1) items.push_back(free[i]);
    }
    if (!f(VertexSet(std::move(items)))) return false;
  }
  return true;
}

// Properness of (A, B) extensions is tested against every C in between.
bool AllProperBetween(const FiniteGraph& g, const VertexSet& a,
                      const VertexSet& b, const Capacity& cap,
                      const std::function<bool(const VertexSet&)>& f) {
  return ForEachBetween(g, a, b.Minus(a), cap, [&](const VertexSet& c) {
    return c.size() == b.size() || f(c);
  });
}

}  // namespace

bool IsClosed(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
              const Capacity& cap) {
  CheckSubset(g, a, b);
  const long da = Predimension(g, a);
  return ForEachBetween(g, a, b.Minus(a), cap, [&](const VertexSet& c) {
    return c.size() == a.size() || Predimension(g, c) > da;
  });
}

bool IsWeaklyClosed(const FiniteGraph& g, const VertexSet& a,
                    const VertexSet& b, const Capacity& cap) {
  CheckSubset(g, a, b);
  const long da = Predimension(g, a);
  return ForEachBetween(g, a, b.Minus(a), cap, [&](const VertexSet& c) {
    return Predimension(g, c) >= da;
  });
}

long Dimension(const FiniteGraph& g, const VertexSet& s, const Capacity& cap) {
  g.CheckSet(s);
  long best = std::numeric_limits<long>::max();
  ForEachBetween(g, s, g.AllVertices().Minus(s), cap, [&](const VertexSet& c) {
    best = std::min(best, Predimension(g, c));
    return true;
  });
  return best;
}

bool IsMinimalPair(const FiniteGraph& g, const VertexSet& a,
                   const VertexSet& b, const Capacity& cap) {
  if (IsClosed(g, a, b, cap)) return false;
  return AllProperBetween(g, a, b, cap, [&](const VertexSet& c) {
    return IsClosed(g, a, c, cap);
  });
}

bool IsWeakMinimalPair(const FiniteGraph& g, const VertexSet& a,
                       const VertexSet& b, const Capacity& cap) {
  if (IsWeaklyClosed(g, a, b, cap)) return false;
  return AllProperBetween(g, a, b, cap, [&](const VertexSet& c) {
    return IsWeaklyClosed(g, a, c, cap);
  });
}

bool IsIntrinsic(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                 const Capacity& cap) {
  CheckSubset(g, a, b);
  if (a.size() == b.size()) return false;
  return AllProperBetween(g, a, b, cap, [&](const VertexSet& c) {
    return !IsClosed(g, c, b, cap);
  });
}

bool IsWeakIntrinsic(const FiniteGraph& g, const VertexSet& a,
                     const VertexSet& b, const Capacity& cap) {
  CheckSubset(g, a, b);
  if (a.size() == b.size()) return false;
  return AllProperBetween(g, a, b, cap, [&](const VertexSet& c) {
    return !IsWeaklyClosed(g, c, b, cap);
  });
}

namespace {

VertexSet LeastSuperset(const FiniteGraph& g, const VertexSet& s,
                        const Capacity& cap,
                        const std::function<bool(const VertexSet&)>& ok) {
  g.CheckSet(s);
  std::optional<VertexSet> best;
  ForEachBetween(g, s, g.AllVertices().Minus(s), cap, [&](const VertexSet& c) {
    if (ok(c) && (!best || c.size() < best->size() ||
                  (c.size() == best->size() && c < *best))) {
      best = c;
    }
    return true;
  });
  return *best;
}

}  // namespace

VertexSet LeastClosedSuperset(const FiniteGraph& g, const VertexSet& s,
                              const Capacity& cap) {
  const VertexSet all = g.AllVertices();
  return LeastSuperset(g, s, cap, [&](const VertexSet& c) {
    return IsClosed(g, c, all, cap);
  });
}

VertexSet LeastWeaklyClosedSuperset(const FiniteGraph& g, const VertexSet& s,
                                    const Capacity& cap) {
  const VertexSet all = g.AllVertices();
  return LeastSuperset(g, s, cap, [&](const VertexSet& c) {
    return IsWeaklyClosed(g, c, all, cap);
  });
}

VertexSet ClosureByMinimalPairs(const FiniteGraph& g, const VertexSet& s,
                                const Capacity& cap) {
  g.CheckSet(s);
  VertexSet current = s;
  for (;;) {
    const VertexSet outside = g.AllVertices().Minus(current);
    std::optional<VertexSet> found;
    ForEachBetween(g, current, outside, cap, [&](const VertexSet& c) {
      if (c.size() > current.size() && IsMinimalPair(g, current, c, cap)) {
        found = c;
        return false;
      }
      return true;
    });
    if (!found) return current;
    current = *found;
  }
}

}  // namespace gfl::reference
