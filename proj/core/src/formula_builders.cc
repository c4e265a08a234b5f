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

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/formula.h"

namespace gfl {

namespace {

std::vector<std::string> Names(char prefix, int from, int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(DiagramVariable(prefix, from + i));
  return out;
}

void Distinct(const std::vector<std::string>& vars, std::vector<Formula>& out) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      out.push_back(Formula::Neq(vars[i], vars[j]));
    }
  }
}

}  // namespace

std::string DiagramVariable(char prefix, std::size_t index) {
  return std::string(1, prefix) + std::to_string(index + 1);
}

Formula BuildGammaStar(int m) {
  if (m < 1) throw PreconditionError("gamma* needs at least one variable");
  std::vector<Formula> distinct, apart;
  for (int i = 0; i < m; ++i) {
    const std::string x = DiagramVariable('x', i);
    distinct.push_back(Formula::Neq("y", x));
    apart.push_back(Formula::Not(Formula::Rel(x, "y")));
  }
  return Formula::Forall("y", Formula::Implies(Formula::Conj(std::move(distinct)),
                                               Formula::Conj(std::move(apart))));
}

Formula BuildDiagram(const FiniteGraph& a) {
  return BuildDiagram(a, VertexSet{});
}

Formula BuildDiagram(const FiniteGraph& a, const VertexSet& over) {
  a.CheckSet(over);
  // Tuple order: the vertices of `over`, then the rest.
  std::vector<Vertex> order = over.items();
  std::vector<std::string> names;
  std::vector<char> is_new;
  const bool relative = !over.empty();
  for (std::size_t i = 0; i < order.size(); ++i) {
    names.push_back(DiagramVariable('x', i));
    is_new.push_back(0);
  }
  std::size_t fresh = 0;
  for (Vertex v : a.AllVertices().Minus(over)) {
    order.push_back(v);
    names.push_back(relative ? DiagramVariable('y', fresh++)
                             : DiagramVariable('x', order.size() - 1));
    is_new.push_back(1);
  }
  std::vector<Formula> distinct, relations;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (relative && !is_new[i] && !is_new[j]) continue;
      distinct.push_back(Formula::Neq(names[i], names[j]));
      Formula rel = Formula::Rel(names[i], names[j]);
      relations.push_back(a.adjacent(order[i], order[j])
                              ? rel
                              : Formula::Not(std::move(rel)));
    }
  }
  distinct.insert(distinct.end(), relations.begin(), relations.end());
  return Formula::Conj(std::move(distinct));
}

std::vector<Formula> UnivAxioms(ClassIndex alpha, std::size_t size_bound,
                                std::size_t path_bound, const Capacity& cap) {
  std::vector<Formula> out;
  for (std::size_t len = 3; len <= path_bound; ++len) {
    const std::vector<std::string> v = Names('x', 0, static_cast<int>(len));
    std::vector<Formula> parts;
    Distinct(v, parts);
    for (std::size_t i = 0; i < len; ++i) {
      parts.push_back(Formula::Rel(v[i], v[(i + 1) % len]));
    }
    out.push_back(
        Formula::Not(Formula::Exists(v, Formula::Conj(std::move(parts)))));
  }

  if (!alpha.is_omega()) {
    const int n = alpha.value();
    const int degree = n == 0 ? 4 : n + 2;
    const std::vector<std::string> z = Names('z', 0, degree);
    std::vector<Formula> star;
    Distinct(z, star);
    for (const auto& zi : z) star.push_back(Formula::Rel("x", zi));
    Formula many = Formula::Exists(z, Formula::Conj(std::move(star)));
    if (n == 0) {
      out.push_back(Formula::Forall("x", Formula::Not(std::move(many))));
    } else {
      const std::vector<std::string> y = Names('y', 0, 2 * n);
      std::vector<Formula> path;
      Distinct(y, path);
      for (const auto& yi : y) path.push_back(Formula::Neq(yi, "x"));
      path.push_back(Formula::Rel("x", y[0]));
      for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        path.push_back(Formula::Rel(y[i], y[i + 1]));
      }
      out.push_back(Formula::Forall(
          "x", Formula::Implies(
                   std::move(many),
                   Formula::Not(Formula::Exists(y, Formula::Conj(std::move(path)))))));
    }
  }

  for (const FiniteGraph& a : EnumerateClass(alpha, size_bound, cap)) {
    if (a.empty()) continue;
    const int m = static_cast<int>(a.order());
    std::vector<Formula> parts;
    Formula diagram = BuildDiagram(a);
    if (diagram.kind() != Formula::Kind::kTrue) parts.push_back(diagram);
    parts.push_back(BuildGammaStar(m));
    out.push_back(
        Formula::Exists(Names('x', 0, m), Formula::Conj(std::move(parts))));
  }
  return out;
}

}  // namespace gfl
