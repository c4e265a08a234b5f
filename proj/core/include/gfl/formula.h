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

// First-order formulas over one binary relation R and equality, with a
// parser, printer, evaluator and the builders for closedness, diagrams
// and the universality axioms.

#ifndef GFL_FORMULA_H_
#define GFL_FORMULA_H_

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfl/capacity.h"
#include "gfl/graph.h"

namespace gfl {

// Immutable formula tree; copies share structure. And/Or nodes have at
// least two children (use Conj/Disj to build from arbitrary lists).
class Formula {
 public:
  enum class Kind {
    kTrue, kFalse, kRel, kEq, kNot, kAnd, kOr, kImplies, kForall, kExists,
  };

  static Formula True();
  static Formula False();
  static Formula Rel(std::string x, std::string y);
  static Formula Eq(std::string x, std::string y);
  static Formula Neq(std::string x, std::string y);
  static Formula Not(Formula f);
  static Formula And(std::vector<Formula> children);  // size >= 2
  static Formula Or(std::vector<Formula> children);   // size >= 2
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Forall(std::string var, Formula body);
  static Formula Exists(std::string var, Formula body);
  // Quantifies the variables in order, the first one outermost.
  static Formula Forall(const std::vector<std::string>& vars, Formula body);
  static Formula Exists(const std::vector<std::string>& vars, Formula body);
  // Conjunction of any number of formulas: true for none, the formula
  // itself for one.
  static Formula Conj(std::vector<Formula> children);
  static Formula Disj(std::vector<Formula> children);

  Kind kind() const { return node_->kind; }
  // Atoms: the two variables. Quantifiers: var() is the bound variable.
  const std::string& var() const { return node_->x; }
  const std::string& lhs_var() const { return node_->x; }
  const std::string& rhs_var() const { return node_->y; }
  std::span<const Formula> children() const { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }

  bool is_quantifier() const {
    return kind() == Kind::kForall || kind() == Kind::kExists;
  }

  int QuantifierRank() const;
  std::set<std::string> FreeVariables() const;
  bool IsSentence() const { return FreeVariables().empty(); }
  std::size_t NodeCount() const;

  // Text in the parser's grammar; Parse(ToString()) rebuilds this formula.
  std::string ToString() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string x, y;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula Make(Kind kind, std::string x, std::string y,
                      std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

// Parses the text grammar:
//   formula := ("forall" | "exists") VAR "." formula | implies
//   implies := or ("->" implies)?      or  := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | ("forall" | "exists") VAR "(" formula ")"
//            | "(" formula ")" | atom | quantified formula
//   atom    := "R" "(" VAR "," VAR ")" | VAR "=" VAR | "true" | "false"
// Bound variables are renamed x1, x2, ... by quantifier depth, skipping
// names that occur free. Throws ParseError with line and column.
Formula ParseFormula(std::string_view text);

// As ParseFormula; each free variable adds a message to `warnings`.
Formula ParseSentence(std::string_view text,
                      std::vector<std::string>* warnings = nullptr);

using Assignment = std::map<std::string, Vertex, std::less<>>;

struct EvalOptions {
  // On forests, quantifiers only try one vertex per orbit of the
  // automorphisms fixing the currently assigned vertices.
  bool orbit_pruning = false;
};

// Tarskian truth in g. Throws PreconditionError for an unassigned free
// variable and UnknownVertexError for an assignment outside g.
bool Evaluate(const FiniteGraph& g, const Formula& f,
              const Assignment& assignment = {}, const EvalOptions& = {});

// Variables x1..xm free, y bound: no vertex outside the x's is adjacent to
// one of them. Throws PreconditionError for m = 0.
Formula BuildGammaStar(int m);

// diag_A(x1..xn) with x_i naming the i-th vertex of A: pairwise distinct,
// every edge, every non-edge. With `over`, x_i names the i-th vertex of
// `over`, y_j the j-th vertex outside it, and only the conjuncts that
// mention some y are kept.
Formula BuildDiagram(const FiniteGraph& a);
Formula BuildDiagram(const FiniteGraph& a, const VertexSet& over);

// Variable names used by BuildDiagram.
std::string DiagramVariable(char prefix, std::size_t index);

// Acyclicity up to cycles of path_bound vertices, the class axiom for
// finite alpha, and one universality sentence per non-empty member of
// K_alpha with at most size_bound vertices.
std::vector<Formula> UnivAxioms(ClassIndex alpha, std::size_t size_bound,
                                std::size_t path_bound,
                                const Capacity& cap = {});

}  // namespace gfl

#endif  // GFL_FORMULA_H_
