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

#include "gfl/formula.h"

#include <algorithm>

#include "gfl/errors.h"

namespace gfl {

Formula Formula::Make(Kind kind, std::string x, std::string y,
                      std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(
      Node{kind, std::move(x), std::move(y), std::move(children)}));
}

Formula Formula::True() { return Make(Kind::kTrue, "", "", {}); }
Formula Formula::False() { return Make(Kind::kFalse, "", "", {}); }

Formula Formula::Rel(std::string x, std::string y) {
  return Make(Kind::kRel, std::move(x), std::move(y), {});
}

Formula Formula::Eq(std::string x, std::string y) {
  return Make(Kind::kEq, std::move(x), std::move(y), {});
}

Formula Formula::Neq(std::string x, std::string y) {
  return Not(Eq(std::move(x), std::move(y)));
}

Formula Formula::Not(Formula f) { return Make(Kind::kNot, "", "", {std::move(f)}); }

Formula Formula::And(std::vector<Formula> children) {
  if (children.size() < 2) throw PreconditionError("And needs two operands");
  return Make(Kind::kAnd, "", "", std::move(children));
}

Formula Formula::Or(std::vector<Formula> children) {
  if (children.size() < 2) throw PreconditionError("Or needs two operands");
  return Make(Kind::kOr, "", "", std::move(children));
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Make(Kind::kImplies, "", "", {std::move(lhs), std::move(rhs)});
}

Formula Formula::Forall(std::string var, Formula body) {
  return Make(Kind::kForall, std::move(var), "", {std::move(body)});
}

Formula Formula::Exists(std::string var, Formula body) {
  return Make(Kind::kExists, std::move(var), "", {std::move(body)});
}

Formula Formula::Forall(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = Forall(*it, std::move(body));
  }
  return body;
}

Formula Formula::Exists(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = Exists(*it, std::move(body));
  }
  return body;
}

Formula Formula::Conj(std::vector<Formula> children) {
  if (children.empty()) return True();
  if (children.size() == 1) return std::move(children[0]);
  return And(std::move(children));
}

Formula Formula::Disj(std::vector<Formula> children) {
  if (children.empty()) return False();
  if (children.size() == 1) return std::move(children[0]);
  return Or(std::move(children));
}

int Formula::QuantifierRank() const {
  int rank = 0;
  for (const Formula& c : children()) rank = std::max(rank, c.QuantifierRank());
  return is_quantifier() ? rank + 1 : rank;
}

namespace {

void CollectFree(const Formula& f, std::vector<std::string>& bound,
                 std::set<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
  };
  switch (f.kind()) {
    case Formula::Kind::kRel:
    case Formula::Kind::kEq:
      note(f.lhs_var());
      note(f.rhs_var());
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      bound.push_back(f.var());
      CollectFree(f.child(0), bound, out);
      bound.pop_back();
      return;
    default:
      for (const Formula& c : f.children()) CollectFree(c, bound, out);
  }
}

// Binding strength used by the printer; a child is parenthesized when its
// strength is below what the parent position requires.
int Strength(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: return 0;
    case Formula::Kind::kImplies: return 1;
    case Formula::Kind::kOr: return 2;
    case Formula::Kind::kAnd: return 3;
    case Formula::Kind::kNot: return 4;
    default: return 5;
  }
}

void Print(const Formula& f, int required, std::string& out) {
  const bool parens = Strength(f) < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::kTrue: out += "true"; break;
    case Formula::Kind::kFalse: out += "false"; break;
    case Formula::Kind::kRel:
      out += "R(" + f.lhs_var() + ", " + f.rhs_var() + ")";
      break;
    case Formula::Kind::kEq: out += f.lhs_var() + " = " + f.rhs_var(); break;
    case Formula::Kind::kNot:
      out += '~';
      Print(f.child(0), 4, out);
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const bool conj = f.kind() == Formula::Kind::kAnd;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i > 0) out += conj ? " & " : " | ";
        Print(f.child(i), conj ? 4 : 3, out);
      }
      break;
    }
    case Formula::Kind::kImplies:
      Print(f.child(0), 2, out);
      out += " -> ";
      Print(f.child(1), 1, out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out += f.kind() == Formula::Kind::kForall ? "forall " : "exists ";
      out += f.var() + ". ";
      Print(f.child(0), 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::set<std::string> Formula::FreeVariables() const {
  std::vector<std::string> bound;
  std::set<std::string> out;
  CollectFree(*this, bound, out);
  return out;
}

std::size_t Formula::NodeCount() const {
  std::size_t n = 1;
  for (const Formula& c : children()) n += c.NodeCount();
  return n;
}

std::string Formula::ToString() const {
  std::string out;
  Print(*this, 0, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_->x != b.node_->x ||
      a.node_->y != b.node_->y ||
      a.children().size() != b.children().size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children().size(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

}  // namespace gfl
