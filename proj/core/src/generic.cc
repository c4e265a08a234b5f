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

#include "gfl/generic.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/game.h"
#include "gfl/rs_value.h"
#include "gfl/strong.h"

namespace gfl {

namespace {

using IdEdge = std::pair<std::string, std::string>;

std::set<IdEdge> EdgesById(const FiniteGraph& g) {
  std::set<IdEdge> out;
  for (const auto& [u, v] : g.edges()) out.emplace(g.id(u), g.id(v));
  return out;
}

std::set<IdEdge> EdgesAmong(const FiniteGraph& g,
                            const std::set<std::string>& ids) {
  std::set<IdEdge> out;
  for (const auto& [u, v] : g.edges()) {
    if (ids.count(g.id(u)) && ids.count(g.id(v))) {
      out.emplace(g.id(u), g.id(v));
    }
  }
  return out;
}

}  // namespace

FiniteGraph FreeJoin(const FiniteGraph& m1, const FiniteGraph& m0,
                     const FiniteGraph& m2) {
  const std::set<std::string> ids1(m1.ids().begin(), m1.ids().end());
  const std::set<std::string> ids2(m2.ids().begin(), m2.ids().end());
  const std::set<std::string> ids0(m0.ids().begin(), m0.ids().end());
  std::set<std::string> common;
  std::set_intersection(ids1.begin(), ids1.end(), ids2.begin(), ids2.end(),
                        std::inserter(common, common.end()));
  if (common != ids0) {
    throw PreconditionError("the shared vertices of M1 and M2 are not M0");
  }
  const std::set<IdEdge> shared = EdgesById(m0);
  if (EdgesAmong(m1, ids0) != shared || EdgesAmong(m2, ids0) != shared) {
    throw PreconditionError("M1 or M2 disagrees with M0 on its edges");
  }
  std::set<std::string> ids = ids1;
  ids.insert(ids2.begin(), ids2.end());
  std::set<IdEdge> edges = EdgesById(m1);
  const std::set<IdEdge> edges2 = EdgesById(m2);
  edges.insert(edges2.begin(), edges2.end());
  return FiniteGraph::Build(std::vector<std::string>(ids.begin(), ids.end()),
                            std::vector<IdEdge>(edges.begin(), edges.end()));
}

GenericChain BuildGenericChain(ClassIndex alpha, int steps,
                               std::size_t size_bound, const Capacity& cap) {
  if (steps < 0) throw PreconditionError("steps must be non-negative");
  GenericChain chain;
  chain.alpha = alpha;
  for (FiniteGraph& g : EnumerateClass(alpha, size_bound, cap)) {
    if (!g.empty()) chain.catalogue.push_back(std::move(g));
  }
  struct Obligation {
    bool universality;
    std::size_t structure;
    std::vector<std::string> over;
  };
  std::deque<Obligation> queue;
  for (std::size_t i = 0; i < chain.catalogue.size(); ++i) {
    queue.push_back({true, i, {}});
  }
  chain.stages.emplace_back();
  for (int step = 1; step <= steps && !queue.empty(); ++step) {
    const Obligation job = std::move(queue.front());
    queue.pop_front();
    const FiniteGraph& current = chain.stages.back();
    const FiniteGraph copy = chain.catalogue[job.structure].Prefixed(
        "s" + std::to_string(step) + ".");
    FiniteGraph next;
    if (job.universality) {
      next = FreeJoin(current, FiniteGraph(), copy);
    } else {
      const FiniteGraph base = current.Induced(current.Set(job.over));
      const FiniteGraph extended = FreeJoin(base, FiniteGraph(), copy);
      next = FreeJoin(current, base, extended);
    }
    if (!InClass(next, alpha)) {
      throw InconsistencyError("chain stage " + std::to_string(step) +
                               " left the class");
    }
    if (!IsClosed(next, next.Set(current.ids()))) {
      throw InconsistencyError("chain stage " + std::to_string(step - 1) +
                               " is not closed in the next stage");
    }
    ChainLedgerEntry entry;
    entry.step = step;
    entry.kind = job.universality ? "universality" : "homogeneity";
    entry.structure = job.structure;
    entry.over = job.over;
    entry.added = copy.ids();
    chain.ledger.push_back(entry);
    if (job.universality) {
      const std::size_t used = copy.order();
      for (std::size_t d = 0; d < chain.catalogue.size(); ++d) {
        if (used + chain.catalogue[d].order() <= size_bound) {
          queue.push_back({false, d, copy.ids()});
        }
      }
    }
    chain.stages.push_back(std::move(next));
  }
  chain.pending = queue.size();
  return chain;
}

std::size_t PseudofiniteChainLength(ClassIndex alpha, std::size_t size_bound,
                                    const Capacity& cap) {
  return EnumerateClass(alpha, size_bound, cap).size();
}

FiniteGraph PseudofiniteChain(ClassIndex alpha, std::size_t i,
                              std::size_t size_bound, const Capacity& cap) {
  const std::vector<FiniteGraph> members =
      EnumerateClass(alpha, size_bound, cap);
  if (i >= members.size()) {
    throw PreconditionError("index " + std::to_string(i) +
                            " exceeds the enumeration length " +
                            std::to_string(members.size()));
  }
  return DisjointUnion(std::span(members.data(), i + 1));
}

Approximant BuildApproximant(int n, int k, const ApproximantOptions& options,
                             const Capacity& cap) {
  if (n < 0) throw PreconditionError("class index must be finite");
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (k > cap.decide_rank) {
    throw CapacityError("rank", static_cast<std::size_t>(k),
                        static_cast<std::size_t>(cap.decide_rank));
  }
  Approximant out;
  out.n = n;
  out.k = k;
  out.r = SimilarityRadius(k);
  out.s = k - 1;
  out.size_cap = options.size_cap.value_or(2 * out.r + 2);
  out.copies = options.copies.value_or(k);
  if (out.copies < 1) throw PreconditionError("copies must be positive");

  const std::vector<FiniteGraph> trees =
      EnumerateTrees(ClassIndex::Finite(n), out.size_cap, cap);
  out.trees_examined = trees.size();
  std::set<std::string> seen;
  for (const FiniteGraph& tree : trees) {
    const std::vector<RSValue> values = RsValuesOfForest(tree, out.r, out.s);
    for (Vertex v = 0; static_cast<std::size_t>(v) < tree.order(); ++v) {
      if (!seen.insert(values[v].ToString()).second) continue;
      if (out.trees.empty() || !(out.trees.back() == tree)) {
        out.trees.push_back(tree);
      }
      out.values.push_back(
          {values[v].ToString(), out.trees.size() - 1, tree.id(v)});
    }
  }
  std::vector<FiniteGraph> parts;
  for (const FiniteGraph& tree : out.trees) {
    for (int c = 0; c < out.copies; ++c) parts.push_back(tree);
  }
  out.graph = DisjointUnion(parts);
  return out;
}

DecideResult Decide(const Formula& sentence, int n,
                    const DecideOptions& options) {
  const std::set<std::string> free = sentence.FreeVariables();
  if (!free.empty()) {
    throw PreconditionError("formula is not a sentence: '" + *free.begin() +
                            "' is free");
  }
  DecideResult out;
  out.rank = sentence.QuantifierRank();
  if (out.rank > options.capacity.decide_rank) {
    throw CapacityError("rank", static_cast<std::size_t>(out.rank),
                        static_cast<std::size_t>(options.capacity.decide_rank));
  }
  out.k = std::max(out.rank, 1);
  const EvalOptions eval{.orbit_pruning = true};
  out.primary = BuildApproximant(n, out.k, options.primary, options.capacity);
  out.in_theory = Evaluate(out.primary.graph, sentence, {}, eval);
  if (options.cross_validate) {
    ApproximantOptions second;
    if (options.secondary) {
      second = *options.secondary;
    } else {
      second.size_cap = std::max<std::size_t>(out.primary.size_cap - 1, 2);
      second.copies = out.k + 1;
    }
    out.secondary = BuildApproximant(n, out.k, second, options.capacity);
    const bool other = Evaluate(out.secondary->graph, sentence, {}, eval);
    if (other != out.in_theory) {
      throw InconsistencyError(
          "approximants disagree on the sentence (primary says " +
          std::string(out.in_theory ? "true" : "false") + ")");
    }
  }
  return out;
}

}  // namespace gfl
