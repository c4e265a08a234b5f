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

// Formulas whose quantifiers range over intrinsic extensions of the tuple
// already chosen. Each quantifier node carries the extension A <= B it
// ranges over, which lets the evaluator search witnesses next to the tuple
// instead of across the whole graph.

#ifndef GFL_CLOSURE_FORMULA_H_
#define GFL_CLOSURE_FORMULA_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfl/formula.h"
#include "gfl/graph.h"

namespace gfl {

// Tuple convention: a node of arity n talks about tuple positions 0..n-1.
// Diagram(A) reads position i as the i-th vertex of A. An extension node
// over A <= B has the arity of A; its body has the arity of B, where the
// first |A| positions are A's vertices in order and the remaining ones are
// the vertices of B \ A in order.
class ClosureFormula {
 public:
  enum class Kind { kTrue, kFalse, kDiagram, kExistsExt, kForallExt, kNot,
                    kAnd, kOr };

  static ClosureFormula True(int arity);
  static ClosureFormula False(int arity);
  static ClosureFormula Diagram(FiniteGraph a);
  // Throws PreconditionError unless B is a forest, A a proper subset of its
  // vertices, B intrinsic over A, and the body's arity equals |B|.
  static ClosureFormula ExistsExt(FiniteGraph b, VertexSet a,
                                  ClosureFormula body);
  static ClosureFormula ForallExt(FiniteGraph b, VertexSet a,
                                  ClosureFormula body);
  static ClosureFormula Not(ClosureFormula f);
  // Operands must share one arity; at least one operand.
  static ClosureFormula And(std::vector<ClosureFormula> children);
  static ClosureFormula Or(std::vector<ClosureFormula> children);

  Kind kind() const { return node_->kind; }
  int arity() const { return node_->arity; }
  // Diagram: A. Extension nodes: B.
  const FiniteGraph& structure() const { return node_->graph; }
  // Extension nodes: A as a subset of B.
  const VertexSet& base() const { return node_->base; }
  std::span<const ClosureFormula> children() const { return node_->children; }
  const ClosureFormula& child(std::size_t i) const { return node_->children[i]; }

  // Nesting depth of extension quantifiers.
  int Depth() const;

  // Plain formula with free variables v1..v<arity> for the tuple positions.
  Formula ToFormula() const;
  std::string ToString() const { return ToFormula().ToString(); }

  // Vertices of B \ A in an order where each is adjacent to an earlier one
  // or to A, paired with that earlier neighbour as a tuple position.
  struct Step {
    int position;  // tuple position being bound
    int anchor;    // earlier tuple position it must be adjacent to
  };
  const std::vector<Step>& search_order() const { return node_->order; }
  // Extension nodes: the vertex of B at each body tuple position.
  const std::vector<Vertex>& slots() const { return node_->slots; }

 private:
  struct Node {
    Kind kind = Kind::kTrue;
    int arity = 0;
    FiniteGraph graph;
    VertexSet base;
    std::vector<ClosureFormula> children;
    std::vector<Step> order;
    std::vector<Vertex> slots;
  };
  static Node Blank(Kind kind, int arity);
  explicit ClosureFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static ClosureFormula Extension(Kind kind, FiniteGraph b, VertexSet a,
                                  ClosureFormula body);
  static ClosureFormula Junction(Kind kind, std::vector<ClosureFormula> c);

  std::shared_ptr<const Node> node_;
};

// Tuple position p is named "v<p+1>" in ToFormula.
std::string TupleVariable(std::size_t position);

// Evaluation at a tuple whose length equals the arity (PreconditionError
// otherwise). Witnesses are searched only among neighbours of vertices
// already in the tuple, which covers the closure of the tuple.
bool EvaluateClosureFormula(const FiniteGraph& g, const ClosureFormula& f,
                            std::span<const Vertex> tuple);

// Same truth value through ToFormula and the plain evaluator.
bool EvaluateClosureFormulaReference(const FiniteGraph& g,
                                     const ClosureFormula& f,
                                     std::span<const Vertex> tuple);

// Canonical code of the induced graph on cl*(tuple) with the tuple as
// marks. Requires a forest.
std::string ClosureTypeCode(const FiniteGraph& g,
                            std::span<const Vertex> tuple);

struct Realization {
  std::vector<Vertex> tuple;  // vertices of the ambient graph
  FiniteGraph closure;        // induced graph on cl*(tuple)
  std::vector<Vertex> marks;  // the tuple as vertices of `closure`
};

// First tuple of distinct vertices of h, in lexicographic index order,
// satisfying f, with its marked closure; nullopt when none does.
std::optional<Realization> RealizeClosureFormula(const ClosureFormula& f,
                                                 const FiniteGraph& h);

}  // namespace gfl

#endif  // GFL_CLOSURE_FORMULA_H_
