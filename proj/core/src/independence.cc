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

#include "gfl/independence.h"

#include <deque>
#include <random>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/strong.h"

namespace gfl {

VertexSet ComponentOver(const FiniteGraph& g, Vertex a, const VertexSet& set) {
  g.CheckVertex(a);
  g.CheckSet(set);
  if (set.contains(a)) {
    throw PreconditionError("vertex '" + g.id(a) + "' lies in A");
  }
  std::vector<char> seen(g.order(), 0);
  for (Vertex v : set) seen[v] = 1;
  seen[a] = 1;
  std::vector<Vertex> found{a};
  std::deque<Vertex> queue{a};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        found.push_back(w);
        queue.push_back(w);
      }
    }
  }
  return VertexSet(std::move(found));
}

DIndependenceReport DIndependent(const FiniteGraph& g, const VertexSet& b,
                                 const VertexSet& c, const VertexSet& a) {
  DIndependenceReport out;
  const VertexSet ac = a.Union(c);
  out.d_over_c = RelativeDimension(g, b, c);
  out.d_over_ac = RelativeDimension(g, b, ac);
  out.cl_bc = WeakClosure(g, b.Union(c));
  out.cl_ac = WeakClosure(g, ac);
  out.cl_c = WeakClosure(g, c);
  const bool a_fails = out.d_over_c != out.d_over_ac;
  const bool b_fails = out.cl_bc.Intersect(out.cl_ac) != out.cl_c;
  out.independent = !a_fails && !b_fails;
  if (a_fails) out.failed_clause = "a";
  if (b_fails) out.failed_clause += a_fails ? ",b" : "b";
  return out;
}

bool IsFreeJoin(const FiniteGraph& g, const VertexSet& b1, const VertexSet& c,
                const VertexSet& b2) {
  g.CheckSet(b1);
  g.CheckSet(c);
  g.CheckSet(b2);
  if (b1.Intersect(b2) != c) {
    throw PreconditionError("B1 n B2 differs from C");
  }
  const VertexSet only2 = b2.Minus(c);
  for (Vertex v : b1.Minus(c)) {
    for (Vertex w : g.neighbors(v)) {
      if (only2.contains(w)) return false;
    }
  }
  return IsWeaklyClosed(g, b1.Union(b2));
}

AclOracle::AclOracle(const FiniteGraph& g, Function f, int samples,
                     std::uint64_t seed)
    : f_(std::move(f)) {
  std::mt19937_64 rng(seed);
  const VertexSet all = g.AllVertices();
  auto random_subset = [&](const VertexSet& from, double p) {
    std::bernoulli_distribution keep(p);
    std::vector<Vertex> items;
    for (Vertex v : from) {
      if (keep(rng)) items.push_back(v);
    }
    return VertexSet(std::move(items));
  };
  auto apply = [&](const VertexSet& x) {
    VertexSet y = f_(x);
    g.CheckSet(y);
    return y;
  };
  for (int i = 0; i < samples; ++i) {
    const VertexSet x = random_subset(all, i % 2 == 0 ? 0.25 : 0.5);
    const VertexSet y = x.Union(random_subset(all.Minus(x), 0.3));
    const VertexSet ax = apply(x);
    if (!x.IsSubsetOf(ax)) {
      throw PreconditionError("acl oracle is not extensive");
    }
    if (apply(ax) != ax) {
      throw PreconditionError("acl oracle is not idempotent");
    }
    if (!ax.IsSubsetOf(apply(y))) {
      throw PreconditionError("acl oracle is not monotone");
    }
  }
}

AclOracle AclOracle::FromTable(
    const FiniteGraph& g, std::vector<std::pair<VertexSet, VertexSet>> rules) {
  for (const auto& [from, to] : rules) {
    g.CheckSet(from);
    g.CheckSet(to);
  }
  return AclOracle(g, [rules = std::move(rules)](const VertexSet& x) {
    VertexSet current = x;
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [from, to] : rules) {
        if (from.IsSubsetOf(current) && !to.IsSubsetOf(current)) {
          current = current.Union(to);
          changed = true;
        }
      }
    }
    return current;
  });
}

AclOracle AclOracle::Identity(const FiniteGraph& g) {
  return AclOracle(g, [](const VertexSet& x) { return x; }, 0);
}

bool NonforkingOver(const FiniteGraph& g, const VertexSet& tuple,
                    const VertexSet& a, const VertexSet& b,
                    const AclOracle& acl) {
  g.CheckSet(tuple);
  g.CheckSet(a);
  g.CheckSet(b);
  if (!a.IsSubsetOf(b)) throw PreconditionError("A is not a subset of B");
  if (acl(a) != a) throw PreconditionError("A is not algebraically closed");
  for (Vertex x : tuple.Minus(a)) {
    if (ComponentOver(g, x, a).Intersects(b)) return false;
  }
  return true;
}

ForkingReport ForkingCase(const FiniteGraph& g, Vertex x, const VertexSet& a,
                          const VertexSet& b, const AclOracle& acl) {
  g.CheckVertex(x);
  g.CheckSet(a);
  g.CheckSet(b);
  if (!IsForest(g)) throw NotAForestError("forking requires an acyclic graph");
  if (!a.IsSubsetOf(b) || !IsWeaklyClosed(g, a, b)) {
    throw PreconditionError("A is not weakly closed in B");
  }
  if (!IsWeaklyClosed(g, b)) {
    throw PreconditionError("B is not weakly closed in the graph");
  }
  ForkingReport out;
  const VertexSet cl_a = ClosureStar(g, a).closure;
  const VertexSet cl_b = ClosureStar(g, b).closure;
  if (cl_b.contains(x) && !cl_a.contains(x)) {
    out.case_number = 1;
    return out;
  }
  if (!cl_a.contains(x)) return out;
  const VertexSet acl_a = acl(a);
  if (b.contains(x)) {
    if (!acl_a.contains(x)) out.case_number = 2;
    return out;
  }
  if (acl_a.contains(x)) return out;
  out.path = UniquePathTo(g, a, x, /*check_precondition=*/false);
  const VertexSet b_only = b.Minus(a);
  bool crosses = false;
  bool free_vertex = false;
  for (Vertex v : out.path) {
    if (b_only.contains(v)) {
      crosses = true;
      free_vertex = free_vertex || !acl_a.contains(v);
    }
  }
  if (crosses && free_vertex) out.case_number = 3;
  return out;
}

}  // namespace gfl
