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

// Definition-level implementations of the closure calculus by subset
// enumeration. They are exponential and size-gated; the library uses them
// as a fallback for graphs with cycles and the tests use them as oracles.

#ifndef GFL_REFERENCE_H_
#define GFL_REFERENCE_H_

#include "gfl/capacity.h"
#include "gfl/graph.h"

namespace gfl::reference {

// All enumerate the sets C with A <= C <= B and throw CapacityError when
// |B \ A| exceeds cap.brute_force_vertices.
bool IsClosed(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
              const Capacity& cap = {});
bool IsWeaklyClosed(const FiniteGraph& g, const VertexSet& a,
                    const VertexSet& b, const Capacity& cap = {});
long Dimension(const FiniteGraph& g, const VertexSet& s,
               const Capacity& cap = {});

// (A, B) minimal pair: A not closed in B, closed in every C with A <= C < B.
bool IsMinimalPair(const FiniteGraph& g, const VertexSet& a,
                   const VertexSet& b, const Capacity& cap = {});
// (A, B) weak minimal pair: the same with weak closedness.
bool IsWeakMinimalPair(const FiniteGraph& g, const VertexSet& a,
                       const VertexSet& b, const Capacity& cap = {});
// A < B and A is not closed in any C with A <= C < B.
bool IsIntrinsic(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                 const Capacity& cap = {});
bool IsWeakIntrinsic(const FiniteGraph& g, const VertexSet& a,
                     const VertexSet& b, const Capacity& cap = {});

// Smallest superset of S closed (weakly closed) in G, by size then
// lexicographically among sets of that size.
VertexSet LeastClosedSuperset(const FiniteGraph& g, const VertexSet& s,
                              const Capacity& cap = {});
VertexSet LeastWeaklyClosedSuperset(const FiniteGraph& g, const VertexSet& s,
                                    const Capacity& cap = {});

// Closure as the fixpoint of adding minimal pairs: while some D outside the
// current set makes (C, C u D) a minimal pair, add the first such D.
VertexSet ClosureByMinimalPairs(const FiniteGraph& g, const VertexSet& s,
                                const Capacity& cap = {});

}  // namespace gfl::reference

#endif  // GFL_REFERENCE_H_
