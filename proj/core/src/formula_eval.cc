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

#include <cstdint>
#include <optional>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/formula.h"
#include "orbits.h"

namespace gfl {

namespace {

// Formula with variables resolved to slots of one environment vector. Free
// variables occupy the first slots; a quantifier at depth d binds slot
// free_count + d, so the assigned slots always form a prefix.
struct Compiled {
  Formula::Kind kind;
  int a = -1;
  int b = -1;
  std::uint64_t uses = 0;  // slots mentioned anywhere below
  std::vector<Compiled> children;
};

std::uint64_t Bit(int slot) { return slot < 64 ? std::uint64_t{1} << slot : 0; }

class Compiler {
 public:
  explicit Compiler(std::vector<std::string> free) : scope_(std::move(free)) {}

  Compiled Compile(const Formula& f) {
    Compiled out;
    out.kind = f.kind();
    switch (f.kind()) {
      case Formula::Kind::kRel:
      case Formula::Kind::kEq:
        out.a = Slot(f.lhs_var());
        out.b = Slot(f.rhs_var());
        out.uses = Bit(out.a) | Bit(out.b);
        break;
      case Formula::Kind::kForall:
      case Formula::Kind::kExists:
        out.a = static_cast<int>(scope_.size());
        scope_.push_back(f.var());
        out.children.push_back(Compile(f.child(0)));
        out.uses = out.children[0].uses;
        scope_.pop_back();
        break;
      default:
        for (const Formula& c : f.children()) {
          out.children.push_back(Compile(c));
          out.uses |= out.children.back().uses;
        }
    }
    return out;
  }

 private:
  int Slot(const std::string& v) const {
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i] == v) return static_cast<int>(i);
    }
    throw PreconditionError("variable '" + v + "' is not assigned");
  }

  std::vector<std::string> scope_;
};

class Evaluator {
 public:
  Evaluator(const FiniteGraph& g, const internal::ForestOrbits* orbits)
      : g_(g), orbits_(orbits) {}

  bool Eval(const Compiled& n, std::vector<Vertex>& env) const {
    switch (n.kind) {
      case Formula::Kind::kTrue: return true;
      case Formula::Kind::kFalse: return false;
      case Formula::Kind::kRel: return g_.adjacent(env[n.a], env[n.b]);
      case Formula::Kind::kEq: return env[n.a] == env[n.b];
      case Formula::Kind::kNot: return !Eval(n.children[0], env);
      case Formula::Kind::kAnd:
        for (const Compiled& c : n.children) {
          if (!Eval(c, env)) return false;
        }
        return true;
      case Formula::Kind::kOr:
        for (const Compiled& c : n.children) {
          if (Eval(c, env)) return true;
        }
        return false;
      case Formula::Kind::kImplies:
        return !Eval(n.children[0], env) || Eval(n.children[1], env);
      case Formula::Kind::kForall:
      case Formula::Kind::kExists: {
        const bool want = n.kind == Formula::Kind::kExists;
        if (g_.empty()) return !want;
        // Parts of the body that ignore the bound variable can settle the
        // quantifier before any vertex is tried.
        if (Decided(n.children[0], n.a, want, env)) return !want;
        auto try_vertex = [&](Vertex v) {
          env[n.a] = v;
          return Eval(n.children[0], env) == want;
        };
        bool hit = false;
        if (orbits_ != nullptr) {
          const std::span<const Vertex> marks(env.data(), n.a);
          for (Vertex v : orbits_->Representatives(marks)) {
            if ((hit = try_vertex(v))) break;
          }
        } else {
          for (Vertex v = 0; static_cast<std::size_t>(v) < g_.order(); ++v) {
            if ((hit = try_vertex(v))) break;
          }
        }
        return hit == want;
      }
    }
    return false;
  }

 private:
  // True when some operand of `body` that does not mention `slot` already
  // makes the body differ from `want` for every value of the slot.
  bool Decided(const Compiled& body, int slot, bool want,
               std::vector<Vertex>& env) const {
    const std::uint64_t bit = Bit(slot);
    if (slot >= 64) return false;
    if (want && body.kind == Formula::Kind::kAnd) {
      for (const Compiled& c : body.children) {
        if (!(c.uses & bit) && !Eval(c, env)) return true;
      }
    } else if (!want && body.kind == Formula::Kind::kOr) {
      for (const Compiled& c : body.children) {
        if (!(c.uses & bit) && Eval(c, env)) return true;
      }
    } else if (!want && body.kind == Formula::Kind::kImplies) {
      const Compiled& lhs = body.children[0];
      const Compiled& rhs = body.children[1];
      if (!(lhs.uses & bit) && !Eval(lhs, env)) return true;
      if (!(rhs.uses & bit) && Eval(rhs, env)) return true;
    }
    return false;
  }

  const FiniteGraph& g_;
  const internal::ForestOrbits* orbits_;
};

}  // namespace

bool Evaluate(const FiniteGraph& g, const Formula& f,
              const Assignment& assignment, const EvalOptions& options) {
  std::vector<std::string> free_names;
  std::vector<Vertex> env;
  for (const std::string& v : f.FreeVariables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) {
      throw PreconditionError("free variable '" + v + "' is not assigned");
    }
    g.CheckVertex(it->second);
    free_names.push_back(v);
    env.push_back(it->second);
  }
  const Compiled compiled = Compiler(free_names).Compile(f);
  env.resize(env.size() + static_cast<std::size_t>(f.QuantifierRank()) + 1);
  std::optional<internal::ForestOrbits> orbits;
  if (options.orbit_pruning && IsForest(g)) orbits.emplace(g);
  return Evaluator(g, orbits ? &*orbits : nullptr).Eval(compiled, env);
}

}  // namespace gfl
