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

#include "gfl/closure_formula.h"

#include <algorithm>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/strong.h"

namespace gfl {

namespace {

bool IsIntrinsicKind(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::kMinimalPair:
    case ExtensionKind::kZeroMinimalPair:
    case ExtensionKind::kWeakIntrinsic:
    case ExtensionKind::kIntrinsic:
    case ExtensionKind::kZeroIntrinsic:
      return true;
    default:
      return false;
  }
}

// Vertex of the structure sitting at each tuple position: the base first,
// then the rest, each in index order.
std::vector<Vertex> Slots(const FiniteGraph& b, const VertexSet& base) {
  std::vector<Vertex> slots = base.items();
  for (Vertex v : b.AllVertices().Minus(base)) slots.push_back(v);
  return slots;
}

// Conjuncts over the pairs (i, j), i < j, with j >= first_new.
std::vector<Formula> DiagramParts(const FiniteGraph& b,
                                  const std::vector<Vertex>& slots,
                                  std::size_t first_new) {
  std::vector<Formula> distinct, relations;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (j < first_new) continue;
    for (std::size_t i = 0; i < j; ++i) {
      distinct.push_back(Formula::Neq(TupleVariable(i), TupleVariable(j)));
      Formula rel = Formula::Rel(TupleVariable(i), TupleVariable(j));
      relations.push_back(b.adjacent(slots[i], slots[j])
                              ? rel
                              : Formula::Not(std::move(rel)));
    }
  }
  distinct.insert(distinct.end(), relations.begin(), relations.end());
  return distinct;
}

}  // namespace

std::string TupleVariable(std::size_t position) {
  return "v" + std::to_string(position + 1);
}

ClosureFormula::Node ClosureFormula::Blank(Kind kind, int arity) {
  Node n;
  n.kind = kind;
  n.arity = arity;
  return n;
}

ClosureFormula ClosureFormula::True(int arity) {
  return ClosureFormula(std::make_shared<const Node>(Blank(Kind::kTrue, arity)));
}

ClosureFormula ClosureFormula::False(int arity) {
  return ClosureFormula(
      std::make_shared<const Node>(Blank(Kind::kFalse, arity)));
}

ClosureFormula ClosureFormula::Diagram(FiniteGraph a) {
  Node n = Blank(Kind::kDiagram, static_cast<int>(a.order()));
  n.graph = std::move(a);
  return ClosureFormula(std::make_shared<const Node>(std::move(n)));
}

ClosureFormula ClosureFormula::Extension(Kind kind, FiniteGraph b, VertexSet a,
                                         ClosureFormula body) {
  b.CheckSet(a);
  if (!IsForest(b)) throw NotAForestError("extension structure has a cycle");
  if (a.size() == b.order()) {
    throw PreconditionError("extension adds no vertices");
  }
  const ExtensionReport report = ClassifyExtension(b, a);
  if (!IsIntrinsicKind(report.kind)) {
    throw PreconditionError("structure is not an intrinsic extension (" +
                            std::string(gfl::ToString(report.kind)) + ")");
  }
  if (body.arity() != static_cast<int>(b.order())) {
    throw PreconditionError("body arity " + std::to_string(body.arity()) +
                            " differs from the extension size " +
                            std::to_string(b.order()));
  }
  Node n = Blank(kind, static_cast<int>(a.size()));
  const std::vector<Vertex> slots = Slots(b, a);
  std::vector<int> position(b.order(), -1);
  for (std::size_t p = 0; p < slots.size(); ++p) {
    position[slots[p]] = static_cast<int>(p);
  }
  std::vector<char> placed(b.order(), 0);
  for (Vertex v : a) placed[v] = 1;
  for (Vertex v : report.chain) {
    int anchor = -1;
    for (Vertex w : b.neighbors(v)) {
      if (placed[w] && (anchor < 0 || position[w] < anchor)) anchor = position[w];
    }
    n.order.push_back({position[v], anchor});
    placed[v] = 1;
  }
  n.slots = slots;
  n.graph = std::move(b);
  n.base = std::move(a);
  n.children.push_back(std::move(body));
  return ClosureFormula(std::make_shared<const Node>(std::move(n)));
}

ClosureFormula ClosureFormula::ExistsExt(FiniteGraph b, VertexSet a,
                                         ClosureFormula body) {
  return Extension(Kind::kExistsExt, std::move(b), std::move(a),
                   std::move(body));
}

ClosureFormula ClosureFormula::ForallExt(FiniteGraph b, VertexSet a,
                                         ClosureFormula body) {
  return Extension(Kind::kForallExt, std::move(b), std::move(a),
                   std::move(body));
}

ClosureFormula ClosureFormula::Not(ClosureFormula f) {
  Node n = Blank(Kind::kNot, f.arity());
  n.children.push_back(std::move(f));
  return ClosureFormula(std::make_shared<const Node>(std::move(n)));
}

ClosureFormula ClosureFormula::Junction(Kind kind,
                                        std::vector<ClosureFormula> c) {
  if (c.empty()) throw PreconditionError("connective needs an operand");
  for (const ClosureFormula& f : c) {
    if (f.arity() != c[0].arity()) {
      throw PreconditionError("connective operands differ in arity");
    }
  }
  Node n = Blank(kind, c[0].arity());
  n.children = std::move(c);
  return ClosureFormula(std::make_shared<const Node>(std::move(n)));
}

ClosureFormula ClosureFormula::And(std::vector<ClosureFormula> children) {
  return Junction(Kind::kAnd, std::move(children));
}

ClosureFormula ClosureFormula::Or(std::vector<ClosureFormula> children) {
  return Junction(Kind::kOr, std::move(children));
}

int ClosureFormula::Depth() const {
  int depth = 0;
  for (const ClosureFormula& c : children()) depth = std::max(depth, c.Depth());
  const bool ext = kind() == Kind::kExistsExt || kind() == Kind::kForallExt;
  return ext ? depth + 1 : depth;
}

Formula ClosureFormula::ToFormula() const {
  switch (kind()) {
    case Kind::kTrue: return Formula::True();
    case Kind::kFalse: return Formula::False();
    case Kind::kDiagram:
      return Formula::Conj(
          DiagramParts(structure(), Slots(structure(), {}), 0));
    case Kind::kNot: return Formula::Not(child(0).ToFormula());
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> parts;
      for (const ClosureFormula& c : children()) parts.push_back(c.ToFormula());
      return kind() == Kind::kAnd ? Formula::Conj(std::move(parts))
                                  : Formula::Disj(std::move(parts));
    }
    case Kind::kExistsExt:
    case Kind::kForallExt: {
      const std::vector<Vertex> slots = Slots(structure(), base());
      std::vector<std::string> vars;
      for (std::size_t p = base().size(); p < slots.size(); ++p) {
        vars.push_back(TupleVariable(p));
      }
      Formula diagram =
          Formula::Conj(DiagramParts(structure(), slots, base().size()));
      Formula body = child(0).ToFormula();
      if (kind() == Kind::kExistsExt) {
        return Formula::Exists(vars, Formula::Conj({std::move(diagram),
                                                    std::move(body)}));
      }
      return Formula::Forall(
          vars, Formula::Implies(std::move(diagram), std::move(body)));
    }
  }
  return Formula::False();
}

namespace {

class ClosureEvaluator {
 public:
  explicit ClosureEvaluator(const FiniteGraph& g) : g_(g) {}

  bool Eval(const ClosureFormula& f, std::span<const Vertex> tuple) const {
    using Kind = ClosureFormula::Kind;
    switch (f.kind()) {
      case Kind::kTrue: return true;
      case Kind::kFalse: return false;
      case Kind::kDiagram: {
        const FiniteGraph& a = f.structure();
        for (std::size_t j = 0; j < tuple.size(); ++j) {
          for (std::size_t i = 0; i < j; ++i) {
            if (tuple[i] == tuple[j]) return false;
            if (g_.adjacent(tuple[i], tuple[j]) !=
                a.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
              return false;
            }
          }
        }
        return true;
      }
      case Kind::kNot: return !Eval(f.child(0), tuple);
      case Kind::kAnd:
        for (const ClosureFormula& c : f.children()) {
          if (!Eval(c, tuple)) return false;
        }
        return true;
      case Kind::kOr:
        for (const ClosureFormula& c : f.children()) {
          if (Eval(c, tuple)) return true;
        }
        return false;
      case Kind::kExistsExt:
      case Kind::kForallExt: {
        const bool exists = f.kind() == Kind::kExistsExt;
        std::vector<Vertex> ext(f.structure().order(), -1);
        std::copy(tuple.begin(), tuple.end(), ext.begin());
        std::vector<int> assigned;
        for (std::size_t p = 0; p < tuple.size(); ++p) {
          assigned.push_back(static_cast<int>(p));
        }
        const bool found = Search(f, 0, ext, assigned, exists);
        return exists ? found : !found;
      }
    }
    return false;
  }

 private:
  // Looks for an embedding of the extension whose body value is `want`.
  bool Search(const ClosureFormula& f, std::size_t step,
              std::vector<Vertex>& ext, std::vector<int>& assigned,
              bool want) const {
    const auto& order = f.search_order();
    if (step == order.size()) return Eval(f.child(0), ext) == want;
    const FiniteGraph& b = f.structure();
    const std::vector<Vertex>& slots = f.slots();
    const int pos = order[step].position;
    for (Vertex c : g_.neighbors(ext[order[step].anchor])) {
      bool fits = true;
      for (int q : assigned) {
        if (ext[q] == c ||
            g_.adjacent(ext[q], c) != b.adjacent(slots[q], slots[pos])) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      ext[pos] = c;
      assigned.push_back(pos);
      const bool hit = Search(f, step + 1, ext, assigned, want);
      assigned.pop_back();
      if (hit) return true;
    }
    ext[pos] = -1;
    return false;
  }

  const FiniteGraph& g_;
};

void CheckTuple(const FiniteGraph& g, const ClosureFormula& f,
                std::span<const Vertex> tuple) {
  if (static_cast<int>(tuple.size()) != f.arity()) {
    throw PreconditionError("tuple has " + std::to_string(tuple.size()) +
                            " entries, formula arity is " +
                            std::to_string(f.arity()));
  }
  for (Vertex v : tuple) g.CheckVertex(v);
}

}  // namespace

bool EvaluateClosureFormula(const FiniteGraph& g, const ClosureFormula& f,
                            std::span<const Vertex> tuple) {
  CheckTuple(g, f, tuple);
  return ClosureEvaluator(g).Eval(f, tuple);
}

bool EvaluateClosureFormulaReference(const FiniteGraph& g,
                                     const ClosureFormula& f,
                                     std::span<const Vertex> tuple) {
  CheckTuple(g, f, tuple);
  Assignment env;
  for (std::size_t p = 0; p < tuple.size(); ++p) {
    env[TupleVariable(p)] = tuple[p];
  }
  return Evaluate(g, f.ToFormula(), env);
}

namespace {

Realization MarkedClosure(const FiniteGraph& g, std::span<const Vertex> tuple) {
  Realization out;
  out.tuple.assign(tuple.begin(), tuple.end());
  const VertexSet closure =
      ClosureStar(g, VertexSet(out.tuple)).closure;
  out.closure = g.Induced(closure);
  for (Vertex v : tuple) {
    out.marks.push_back(static_cast<Vertex>(
        std::lower_bound(closure.begin(), closure.end(), v) - closure.begin()));
  }
  return out;
}

}  // namespace

std::string ClosureTypeCode(const FiniteGraph& g,
                            std::span<const Vertex> tuple) {
  for (Vertex v : tuple) g.CheckVertex(v);
  const Realization marked = MarkedClosure(g, tuple);
  return CanonicalCode(marked.closure, marked.marks);
}

std::optional<Realization> RealizeClosureFormula(const ClosureFormula& f,
                                                 const FiniteGraph& h) {
  const ClosureEvaluator eval(h);
  const std::size_t n = static_cast<std::size_t>(f.arity());
  if (n > h.order()) return std::nullopt;
  std::vector<Vertex> tuple(n, 0);
  std::vector<char> used(h.order(), 0);
  // Depth-first over tuples of distinct vertices in lexicographic order.
  std::function<bool(std::size_t)> fill = [&](std::size_t i) {
    if (i == n) return eval.Eval(f, tuple);
    for (Vertex v = 0; static_cast<std::size_t>(v) < h.order(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      tuple[i] = v;
      const bool hit = fill(i + 1);
      used[v] = 0;
      if (hit) return true;
    }
    return false;
  };
  if (!fill(0)) return std::nullopt;
  return MarkedClosure(h, tuple);
}

}  // namespace gfl
