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

// Free joins, finite stages of the generic structure, pseudofinite chains,
// finite approximants for the bounded-degree classes and the decision
// procedure built on them.

#ifndef GFL_GENERIC_H_
#define GFL_GENERIC_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gfl/capacity.h"
#include "gfl/formula.h"
#include "gfl/graph.h"

namespace gfl {

// Union of m1 and m2 over the shared part m0, matched by vertex id, with
// exactly the edges of m1 and m2. Throws PreconditionError unless the ids
// common to m1 and m2 are exactly those of m0 and both induce m0's edges
// there.
FiniteGraph FreeJoin(const FiniteGraph& m1, const FiniteGraph& m0,
                     const FiniteGraph& m2);

struct ChainLedgerEntry {
  int step = 0;  // 1-based; stage `step` is the result
  // "universality": a fresh closed copy of enumeration member `structure`.
  // "homogeneity": the copy listed in `over` extended by a fresh closed
  // copy of enumeration member `structure`.
  std::string kind;
  std::size_t structure = 0;
  std::vector<std::string> over;
  std::vector<std::string> added;
};

struct GenericChain {
  ClassIndex alpha = ClassIndex::Omega();
  std::vector<FiniteGraph> stages;  // stages[0] is empty
  std::vector<ChainLedgerEntry> ledger;
  // Members of K_alpha used by the obligations, in enumeration order.
  std::vector<FiniteGraph> catalogue;
  std::size_t pending = 0;  // obligations still queued at the end
};

// Discharges up to `steps` obligations in FIFO order. The queue starts with
// one universality obligation per non-empty member of K_alpha with at most
// size_bound vertices; each discharged universality obligation queues one
// homogeneity obligation per non-empty D with |A| + |D| <= size_bound,
// asking for a closed copy of A u D over that copy of A. Every stage is
// checked to be in K_alpha and closed in the next (InconsistencyError).
GenericChain BuildGenericChain(ClassIndex alpha, int steps,
                               std::size_t size_bound,
                               const Capacity& cap = {});

// Disjoint union of the first i + 1 members of EnumerateClass(alpha,
// size_bound). PreconditionError when i is past the enumeration.
FiniteGraph PseudofiniteChain(ClassIndex alpha, std::size_t i,
                              std::size_t size_bound,
                              const Capacity& cap = {});
// Number of members available to PseudofiniteChain.
std::size_t PseudofiniteChainLength(ClassIndex alpha, std::size_t size_bound,
                                    const Capacity& cap = {});

struct ApproximantOptions {
  std::optional<std::size_t> size_cap;  // default 2r + 2
  std::optional<int> copies;            // default k
};

struct ApproximantRepresentative {
  std::string value;      // the (r, k-1)-value it realizes first
  std::size_t tree = 0;   // index into Approximant::trees
  std::string root;       // vertex id inside that tree
};

struct Approximant {
  FiniteGraph graph;
  int n = 0;
  int k = 0;
  int r = 0;
  int s = 0;
  std::size_t size_cap = 0;
  int copies = 0;
  std::size_t trees_examined = 0;
  std::vector<FiniteGraph> trees;  // distinct representative trees
  std::vector<ApproximantRepresentative> values;
};

// With r = (3^k - 1)/2: every (r, k-1)-value realized by a vertex of a
// tree in K_n with at most size_cap vertices gets one representative tree
// (the first in enumeration order); the result is `copies` disjoint copies
// of each representative tree. k >= 1 and k <= cap.decide_rank.
Approximant BuildApproximant(int n, int k, const ApproximantOptions& options = {},
                             const Capacity& cap = {});

struct DecideOptions {
  ApproximantOptions primary;
  // Default: size cap one below the primary one and k + 1 copies.
  std::optional<ApproximantOptions> secondary;
  bool cross_validate = true;
  Capacity capacity{};
};

struct DecideResult {
  bool in_theory = false;
  int rank = 0;
  int k = 0;
  Approximant primary;
  std::optional<Approximant> secondary;
};

// Truth of a sentence in the theory of the generic for K_n, read off an
// approximant. The sentence must be closed (PreconditionError) and of rank
// at most capacity.decide_rank (CapacityError). With cross validation, a
// second approximant must give the same answer (InconsistencyError).
DecideResult Decide(const Formula& sentence, int n,
                    const DecideOptions& options = {});

}  // namespace gfl

#endif  // GFL_GENERIC_H_
