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

// Components over a set, d-independence, free joins and the forking
// criteria on finite forests. Algebraic closure is not computed here: it is
// supplied by the caller as an AclOracle.

#ifndef GFL_INDEPENDENCE_H_
#define GFL_INDEPENDENCE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gfl/graph.h"

namespace gfl {

// C(a/A): the vertices joined to `a` by a path avoiding A, `a` included.
// Throws PreconditionError when a is in A.
VertexSet ComponentOver(const FiniteGraph& g, Vertex a, const VertexSet& set);

struct DIndependenceReport {
  bool independent = true;
  // Failed clauses: "a" when d(b/C) != d(b/AC), "b" when
  // cl(bC) n cl(AC) != cl(C), "a,b" when both fail, "" when neither does.
  std::string failed_clause;
  long d_over_c = 0;
  long d_over_ac = 0;
  VertexSet cl_bc;
  VertexSet cl_ac;
  VertexSet cl_c;
};

// Whether `b` is d-independent of `a` over `c`. Requires a forest.
DIndependenceReport DIndependent(const FiniteGraph& g, const VertexSet& b,
                                 const VertexSet& c, const VertexSet& a);

// B1 and B2 are freely joined over C inside g and B1 u B2 is weakly closed.
// Throws PreconditionError unless B1 n B2 = C.
bool IsFreeJoin(const FiniteGraph& g, const VertexSet& b1, const VertexSet& c,
                const VertexSet& b2);

// A closure operator on the vertex sets of one graph. Construction samples
// the operator and rejects it (PreconditionError) when it is not
// extensive, idempotent and monotone on the samples. The wrapped function
// must be safe to call concurrently.
class AclOracle {
 public:
  using Function = std::function<VertexSet(const VertexSet&)>;

  AclOracle(const FiniteGraph& g, Function f, int samples = 256,
            std::uint64_t seed = 1);

  // acl(X) is X plus the targets of every rule whose source lies inside
  // the set, repeated until nothing changes.
  static AclOracle FromTable(const FiniteGraph& g,
                             std::vector<std::pair<VertexSet, VertexSet>> rules);

  // acl(X) = X.
  static AclOracle Identity(const FiniteGraph& g);

  VertexSet operator()(const VertexSet& x) const { return f_(x); }

 private:
  Function f_;
};

// No element of `tuple` outside A has its component over A meeting B.
// Throws PreconditionError unless acl(A) = A and A is a subset of B.
bool NonforkingOver(const FiniteGraph& g, const VertexSet& tuple,
                    const VertexSet& a, const VertexSet& b,
                    const AclOracle& acl);

struct ForkingReport {
  int case_number = 0;  // 1, 2, 3, or 0 when none applies
  std::vector<Vertex> path;  // the path to A when case 3 was examined
};

// Which forking case applies to `x` over A inside B. Requires a forest
// with A weakly closed in B and B weakly closed in g. Case 3 holds when the
// path from x to A crosses B \ A and some vertex of that crossing is not
// in acl(A).
ForkingReport ForkingCase(const FiniteGraph& g, Vertex x, const VertexSet& a,
                          const VertexSet& b, const AclOracle& acl);

}  // namespace gfl

#endif  // GFL_INDEPENDENCE_H_
