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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gfl/capacity.h"
#include "gfl/closure_formula.h"
#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/formula.h"
#include "gfl/game.h"
#include "gfl/generic.h"
#include "gfl/graph.h"
#include "gfl/graph_json.h"
#include "gfl/independence.h"
#include "gfl/rs_value.h"
#include "gfl/strong.h"
#include "json.hpp"

namespace gfl::cli {

namespace {

using json = nlohmann::json;

struct Env {
  std::ostream& out;
  std::ostream& err;
  Capacity cap;
};

struct Command {
  CLI::App* app;
  std::function<int(Env&)> run;
};

using Registry = std::vector<Command>;

// ---- argument helpers

std::vector<std::string> SplitIds(const std::string& text) {
  std::vector<std::string> ids;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    ids.push_back(item.substr(b, e - b + 1));
  }
  return ids;
}

VertexSet ParseSet(const FiniteGraph& g, const std::string& text) {
  return g.Set(SplitIds(text));
}

std::vector<Vertex> ParseTuple(const FiniteGraph& g, const std::string& text) {
  std::vector<Vertex> out;
  for (const auto& id : SplitIds(text)) out.push_back(g.IndexOf(id));
  return out;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Formulas may be given inline or as @path.
std::string FormulaText(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return ReadText(arg.substr(1));
  return arg;
}

json ParseJsonFile(const std::string& path) {
  try {
    return json::parse(ReadText(path));
  } catch (const json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

json Ids(const FiniteGraph& g, const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(g.id(v));
  return a;
}

json Ids(const FiniteGraph& g, std::span<const Vertex> seq) {
  json a = json::array();
  for (Vertex v : seq) a.push_back(g.id(v));
  return a;
}

json GraphJson(const FiniteGraph& g) { return json::parse(GraphToJson(g)); }

int Emit(Env& env, const json& payload, bool verdict = true) {
  env.out << payload.dump(2) << "\n";
  return verdict ? kOk : kNegative;
}

ClassIndex ParseAlpha(const std::string& text) {
  return ClassIndex::Parse(text);
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text << "\n";
}

std::string_view ViolationName(ClassViolation::Kind k) {
  switch (k) {
    case ClassViolation::Kind::kCycle: return "cycle";
    case ClassViolation::Kind::kOverDegree: return "degree";
    case ClassViolation::Kind::kLongPath: return "path";
  }
  return "";
}

json DistanceJson(Distance d) {
  if (d == kInfiniteDistance) return "inf";
  return d;
}

AclOracle ReadAcl(const FiniteGraph& g, const std::string& path) {
  if (path.empty()) return AclOracle::Identity(g);
  // {"a,b": ["c"], "": ["d"]} : source set -> added vertices.
  const json table = ParseJsonFile(path);
  if (!table.is_object()) {
    throw PreconditionError(path + ": expected an object of set -> set rules");
  }
  std::vector<std::pair<VertexSet, VertexSet>> rules;
  for (const auto& [key, value] : table.items()) {
    std::vector<std::string> targets = value.get<std::vector<std::string>>();
    rules.emplace_back(ParseSet(g, key), g.Set(targets));
  }
  return AclOracle::FromTable(g, std::move(rules));
}

ClosureFormula ClosureFormulaFromJson(const json& j) {
  const std::string op = j.at("op").get<std::string>();
  if (op == "true") return ClosureFormula::True(j.at("arity").get<int>());
  if (op == "false") return ClosureFormula::False(j.at("arity").get<int>());
  if (op == "diagram") {
    return ClosureFormula::Diagram(ParseGraphJson(j.at("graph").dump()));
  }
  if (op == "exists" || op == "forall") {
    FiniteGraph b = ParseGraphJson(j.at("graph").dump());
    VertexSet a = b.Set(j.at("base").get<std::vector<std::string>>());
    ClosureFormula body = ClosureFormulaFromJson(j.at("body"));
    return op == "exists"
               ? ClosureFormula::ExistsExt(std::move(b), std::move(a),
                                           std::move(body))
               : ClosureFormula::ForallExt(std::move(b), std::move(a),
                                           std::move(body));
  }
  if (op == "not") return ClosureFormula::Not(ClosureFormulaFromJson(j.at("arg")));
  if (op == "and" || op == "or") {
    std::vector<ClosureFormula> args;
    for (const auto& c : j.at("args")) args.push_back(ClosureFormulaFromJson(c));
    return op == "and" ? ClosureFormula::And(std::move(args))
                       : ClosureFormula::Or(std::move(args));
  }
  throw PreconditionError("unknown closure-formula op '" + op + "'");
}

ClosureFormula ReadClosureFormula(const std::string& arg) {
  const std::string text = FormulaText(arg);
  try {
    return ClosureFormulaFromJson(json::parse(text));
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("closure formula: ") + e.what());
  }
}

struct GameFlags {
  bool no_memo = false;
  bool no_orbits = false;
  bool no_iso = false;
  bool transcript = false;

  void Bind(CLI::App* app) {
    app->add_flag("--no-memo", no_memo, "Disable the position memo");
    app->add_flag("--no-orbits", no_orbits, "Disable orbit pruning");
    app->add_flag("--no-iso", no_iso, "Disable the isomorphism shortcut");
    app->add_flag("--transcript", transcript, "Print one line of optimal play");
  }
  GameOptions Options(const Capacity& cap) const {
    GameOptions o;
    o.memoize = !no_memo;
    o.orbit_pruning = !no_orbits;
    o.isomorphism_shortcut = !no_iso;
    o.transcript = transcript;
    o.capacity = cap;
    return o;
  }
};

json TranscriptJson(const GameResult& r, const FiniteGraph& g1,
                    const FiniteGraph& g2) {
  json moves = json::array();
  for (const GameMove& m : r.transcript) {
    const FiniteGraph& own = m.side == 1 ? g1 : g2;
    const FiniteGraph& other = m.side == 1 ? g2 : g1;
    moves.push_back({{"round", m.round},
                     {"side", m.side},
                     {"spoiler", own.id(m.spoiler)},
                     {"duplicator", m.duplicator < 0
                                        ? json(nullptr)
                                        : json(other.id(m.duplicator))}});
  }
  return moves;
}

json ApproximantJson(const Approximant& a, bool with_graph) {
  json reps = json::array();
  for (const auto& rep : a.values) {
    reps.push_back({{"value", rep.value}, {"tree", rep.tree}, {"root", rep.root}});
  }
  json out = {{"n", a.n},
              {"k", a.k},
              {"r", a.r},
              {"s", a.s},
              {"size_cap", a.size_cap},
              {"copies", a.copies},
              {"trees_examined", a.trees_examined},
              {"order", a.graph.order()},
              {"edges", a.graph.size()},
              {"representatives", reps}};
  if (with_graph) {
    json trees = json::array();
    for (const auto& t : a.trees) trees.push_back(GraphJson(t));
    out["trees"] = trees;
    out["graph"] = GraphJson(a.graph);
  }
  return out;
}

// ---- subcommands

void AddGraphModule(CLI::App& root, Registry& reg) {
  {
    auto st = std::make_shared<std::pair<std::string, std::string>>();
    auto* app = root.add_subcommand("delta", "Predimension of a vertex set");
    app->add_option("-g,--graph", st->first, "Graph JSON")->required();
    app->add_option("-S,--set", st->second, "Comma-separated ids");
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->first);
      return Emit(env, {{"delta", Predimension(g, ParseSet(g, st->second))}});
    }});
  }
  {
    struct S { std::string graph, alpha = "omega"; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("class-check", "Membership in K_alpha");
    app->add_option("-g,--graph", st->graph, "Graph JSON")->required();
    app->add_option("--alpha", st->alpha, "0, 1, 2, ... or omega");
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const ClassIndex alpha = ParseAlpha(st->alpha);
      const ClassReport report = ClassMembership(g, alpha);
      json out = {{"alpha", alpha.ToString()}, {"member", report.member}};
      if (report.violation) {
        const auto& v = *report.violation;
        out["violation"] = {{"kind", ViolationName(v.kind)},
                            {"vertices", Ids(g, std::span(v.vertices))}};
        if (v.kind != ClassViolation::Kind::kCycle) {
          out["violation"]["degree"] = v.degree;
        }
      }
      return Emit(env, out, report.member);
    }});
  }
  {
    struct S { std::string graph, a, b; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("dist", "Distance between two vertices");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-a", st->a)->required();
    app->add_option("-b", st->b)->required();
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      return Emit(env, {{"dist", DistanceJson(Dist(g, g.IndexOf(st->a),
                                                   g.IndexOf(st->b)))}});
    }});
  }
  {
    struct S { std::string graph, a; int r = 1; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("neighborhood", "Induced r-neighbourhood");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-a,--vertex", st->a)->required();
    app->add_option("-r", st->r)->check(CLI::NonNegativeNumber);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const RootedGraph n = Neighborhood(g, g.IndexOf(st->a), st->r);
      return Emit(env, {{"root", n.graph.id(n.root)},
                        {"graph", GraphJson(n.graph)}});
    }});
  }
  {
    struct S { std::string graph; int m = 3; int r = 0; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand(
        "subdiv-clique", "Search for a subdivided K_m with <= r new vertices per edge");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-m", st->m)->check(CLI::Range(2, 64));
    app->add_option("-r", st->r)->check(CLI::NonNegativeNumber);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const bool found = ContainsSubdividedClique(g, st->m, st->r, env.cap);
      return Emit(env, {{"contains", found}}, found);
    }});
  }
  {
    struct S { std::string graph, marks; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("canon", "Canonical code of a marked forest");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("--marks", st->marks, "Ordered comma-separated ids");
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const std::vector<Vertex> marks = ParseTuple(g, st->marks);
      return Emit(env, {{"code", CanonicalCode(g, marks)}});
    }});
  }
  {
    struct S { std::string alpha = "omega"; std::size_t max_size = 3;
               bool trees = false; bool codes = false; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("enumerate", "Members of K_alpha up to iso");
    app->add_option("--alpha", st->alpha);
    app->add_option("--max-size", st->max_size)->required();
    app->add_flag("--trees", st->trees, "Connected members only");
    app->add_flag("--codes", st->codes, "Print codes instead of graphs");
    reg.push_back({app, [st](Env& env) {
      const ClassIndex alpha = ParseAlpha(st->alpha);
      const auto list = st->trees ? EnumerateTrees(alpha, st->max_size, env.cap)
                                  : EnumerateClass(alpha, st->max_size, env.cap);
      json items = json::array();
      for (const auto& g : list) {
        items.push_back(st->codes ? json(CanonicalCode(g)) : GraphJson(g));
      }
      return Emit(env, {{"count", list.size()}, {"members", items}});
    }});
  }
}

void AddStrongModule(CLI::App& root, Registry& reg) {
  {
    struct S { std::string graph, a, b; bool weak = false; bool has_b = false; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("closed", "Is A closed (or weakly closed) in B");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-A", st->a);
    auto* b = app->add_option("-B", st->b, "Defaults to the whole graph");
    app->add_flag("--weak", st->weak);
    reg.push_back({app, [st, b](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const VertexSet a = ParseSet(g, st->a);
      const VertexSet bs = b->count() ? ParseSet(g, st->b) : g.AllVertices();
      const bool v = st->weak ? IsWeaklyClosed(g, a, bs, env.cap)
                              : IsClosed(g, a, bs, env.cap);
      return Emit(env, {{st->weak ? "weakly_closed" : "closed", v}}, v);
    }});
  }
  {
    auto st = std::make_shared<std::pair<std::string, std::string>>();
    auto* app = root.add_subcommand("closure", "Closure cl* with its minimal-pair chain");
    app->add_option("-g,--graph", st->first)->required();
    app->add_option("-S,--set", st->second);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->first);
      const ClosureResult r = ClosureStar(g, ParseSet(g, st->second));
      return Emit(env, {{"closure", Ids(g, r.closure)},
                        {"seed", Ids(g, r.seed)},
                        {"chain", Ids(g, std::span(r.chain))}});
    }});
  }
  {
    auto st = std::make_shared<std::pair<std::string, std::string>>();
    auto* app = root.add_subcommand("weak-closure", "Least weakly closed superset");
    app->add_option("-g,--graph", st->first)->required();
    app->add_option("-S,--set", st->second);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->first);
      return Emit(env, {{"weak_closure",
                         Ids(g, WeakClosure(g, ParseSet(g, st->second)))}});
    }});
  }
  {
    struct S { std::string graph, s, over; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("dim", "Dimension d(S), or d(S/T) with --over");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-S,--set", st->s);
    auto* over = app->add_option("--over", st->over);
    reg.push_back({app, [st, over](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const VertexSet s = ParseSet(g, st->s);
      if (over->count()) {
        return Emit(env, {{"relative_dimension",
                           RelativeDimension(g, s, ParseSet(g, st->over), env.cap)}});
      }
      return Emit(env, {{"dimension", Dimension(g, s, env.cap)}});
    }});
  }
  {
    struct S { std::string graph, a, b; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("classify-ext", "Classify the extension A <= B");
    app->add_option("-g,--graph", st->graph, "B, or the ambient graph with -B")
        ->required();
    app->add_option("-A", st->a);
    auto* b = app->add_option("-B", st->b, "Restrict to the induced subgraph");
    reg.push_back({app, [st, b](Env& env) {
      FiniteGraph g = ReadGraphFile(st->graph);
      if (b->count()) g = g.Induced(ParseSet(g, st->b));
      const ExtensionReport r = ClassifyExtension(g, ParseSet(g, st->a));
      json out = {{"kind", ToString(r.kind)},
                  {"relative_predimension", r.relative_predimension},
                  {"chain", Ids(g, std::span(r.chain))}};
      if (r.singleton) out["singleton"] = g.id(*r.singleton);
      return Emit(env, out);
    }});
  }
  {
    struct S { std::string graph, a, b; bool no_check = false; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("unique-path", "Unique path from b to A");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-A", st->a)->required();
    app->add_option("-b", st->b)->required();
    app->add_flag("--no-check", st->no_check, "Skip the weak-closedness check");
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const auto path =
          UniquePathTo(g, ParseSet(g, st->a), g.IndexOf(st->b), !st->no_check);
      return Emit(env, {{"path", Ids(g, std::span(path))}});
    }});
  }
}

void AddIndependenceModule(CLI::App& root, Registry& reg) {
  {
    struct S { std::string graph, a, set; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("component-over", "Component of a over A");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-a,--vertex", st->a)->required();
    app->add_option("-A", st->set);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      return Emit(env, {{"component",
                         Ids(g, ComponentOver(g, g.IndexOf(st->a),
                                              ParseSet(g, st->set)))}});
    }});
  }
  {
    struct S { std::string graph, b, c, a; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("d-indep", "Is b d-independent of A over C");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-b", st->b);
    app->add_option("-C", st->c);
    app->add_option("-A", st->a);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const DIndependenceReport r =
          DIndependent(g, ParseSet(g, st->b), ParseSet(g, st->c),
                       ParseSet(g, st->a));
      json out = {{"independent", r.independent},
                  {"d_over_c", r.d_over_c},
                  {"d_over_ac", r.d_over_ac},
                  {"cl_bc", Ids(g, r.cl_bc)},
                  {"cl_ac", Ids(g, r.cl_ac)},
                  {"cl_c", Ids(g, r.cl_c)}};
      if (!r.failed_clause.empty()) out["failed_clause"] = r.failed_clause;
      return Emit(env, out, r.independent);
    }});
  }
  {
    struct S { std::string graph, b1, c, b2, m1, m0, m2, out_path; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand(
        "free-join",
        "Build the free join of --m1 and --m2 over --m0, or test -g with "
        "--b1/-C/--b2");
    app->add_option("-g,--graph", st->graph);
    app->add_option("--b1", st->b1);
    app->add_option("-C", st->c);
    app->add_option("--b2", st->b2);
    app->add_option("--m1", st->m1);
    app->add_option("--m0", st->m0);
    app->add_option("--m2", st->m2);
    app->add_option("-o,--out", st->out_path, "Also write the graph here");
    reg.push_back({app, [st](Env& env) {
      if (!st->graph.empty()) {
        const FiniteGraph g = ReadGraphFile(st->graph);
        const bool v = IsFreeJoin(g, ParseSet(g, st->b1), ParseSet(g, st->c),
                                  ParseSet(g, st->b2));
        return Emit(env, {{"free_join", v}}, v);
      }
      if (st->m1.empty() || st->m2.empty()) {
        throw CLI::ValidationError("free-join", "needs -g or --m1/--m2");
      }
      const FiniteGraph m0 =
          st->m0.empty() ? FiniteGraph() : ReadGraphFile(st->m0);
      const FiniteGraph joined =
          FreeJoin(ReadGraphFile(st->m1), m0, ReadGraphFile(st->m2));
      if (!st->out_path.empty()) WriteFile(st->out_path, GraphToJson(joined, 2));
      return Emit(env, {{"graph", GraphJson(joined)}});
    }});
  }
  {
    struct S { std::string graph, tuple, a, b, acl; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("nonforking", "Does the tuple fork over A with B");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("--tuple", st->tuple)->required();
    app->add_option("-A", st->a);
    app->add_option("-B", st->b);
    app->add_option("--acl", st->acl, "JSON table {\"ids\": [added ids]}");
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const AclOracle acl = ReadAcl(g, st->acl);
      const bool v = NonforkingOver(g, ParseSet(g, st->tuple),
                                    ParseSet(g, st->a), ParseSet(g, st->b), acl);
      return Emit(env, {{"nonforking", v}}, v);
    }});
  }
  {
    struct S { std::string graph, x, a, b, acl; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("forking-case", "Which forking case applies to x");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-x,--vertex", st->x)->required();
    app->add_option("-A", st->a);
    app->add_option("-B", st->b);
    app->add_option("--acl", st->acl);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const AclOracle acl = ReadAcl(g, st->acl);
      const ForkingReport r = ForkingCase(g, g.IndexOf(st->x), ParseSet(g, st->a),
                                          ParseSet(g, st->b), acl);
      json out = {{"case", r.case_number == 0 ? json("none") : json(r.case_number)}};
      if (!r.path.empty()) out["path"] = Ids(g, std::span(r.path));
      return Emit(env, out);
    }});
  }
}

void AddFormulaModule(CLI::App& root, Registry& reg) {
  {
    auto st = std::make_shared<std::string>();
    auto* app = root.add_subcommand("parse", "Parse and normalize a formula");
    app->add_option("-f,--formula", *st, "Text or @file")->required();
    reg.push_back({app, [st](Env& env) {
      const Formula f = ParseFormula(FormulaText(*st));
      const auto free = f.FreeVariables();
      return Emit(env, {{"formula", f.ToString()},
                        {"rank", f.QuantifierRank()},
                        {"free", std::vector<std::string>(free.begin(), free.end())},
                        {"sentence", free.empty()}});
    }});
  }
  {
    struct S { std::string graph, formula, assign; bool orbits = false; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("eval", "Evaluate a formula on a graph");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-f,--formula", st->formula, "Text or @file")->required();
    app->add_option("--assign", st->assign, "x=a,y=b");
    app->add_flag("--orbits", st->orbits, "Orbit pruning on forests");
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const Formula f = ParseFormula(FormulaText(st->formula));
      Assignment assignment;
      for (const auto& item : SplitIds(st->assign)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
          throw CLI::ValidationError("--assign", "expected var=id, got " + item);
        }
        assignment[item.substr(0, eq)] = g.IndexOf(item.substr(eq + 1));
      }
      const bool v = Evaluate(g, f, assignment, {.orbit_pruning = st->orbits});
      return Emit(env, {{"value", v}}, v);
    }});
  }
  {
    auto st = std::make_shared<int>(1);
    auto* app = root.add_subcommand("gamma-star", "The closedness formula for m variables");
    app->add_option("-m", *st)->required();
    reg.push_back({app, [st](Env& env) {
      return Emit(env, {{"formula", BuildGammaStar(*st).ToString()}});
    }});
  }
  {
    struct S { std::string graph, over; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("diag", "Diagram of a finite graph");
    app->add_option("-g,--graph", st->graph)->required();
    auto* over = app->add_option("--over", st->over, "Relative to these ids");
    reg.push_back({app, [st, over](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const Formula f = over->count() ? BuildDiagram(g, ParseSet(g, st->over))
                                      : BuildDiagram(g);
      return Emit(env, {{"formula", f.ToString()}});
    }});
  }
  {
    struct S { std::string alpha = "omega"; std::size_t size = 2, path = 5; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("univ", "Finite fragment of the axioms");
    app->add_option("--alpha", st->alpha);
    app->add_option("--size-bound", st->size);
    app->add_option("--path-bound", st->path);
    reg.push_back({app, [st](Env& env) {
      json axioms = json::array();
      for (const auto& f :
           UnivAxioms(ParseAlpha(st->alpha), st->size, st->path, env.cap)) {
        axioms.push_back(f.ToString());
      }
      return Emit(env, {{"axioms", axioms}});
    }});
  }
  {
    struct S { std::string graph, formula, tuple; bool reference = false; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("cf-eval", "Evaluate a closure formula (JSON)");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-f,--formula", st->formula, "JSON text or @file")->required();
    app->add_option("--tuple", st->tuple, "Ordered ids");
    app->add_flag("--reference", st->reference, "Use the plain-formula evaluator");
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const ClosureFormula f = ReadClosureFormula(st->formula);
      const auto tuple = ParseTuple(g, st->tuple);
      const bool v = st->reference ? EvaluateClosureFormulaReference(g, f, tuple)
                                   : EvaluateClosureFormula(g, f, tuple);
      return Emit(env, {{"value", v}, {"formula", f.ToString()}}, v);
    }});
  }
  {
    struct S { std::string graph, formula; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("cf-realize", "First tuple realizing a closure formula");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("-f,--formula", st->formula, "JSON text or @file")->required();
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const auto r = RealizeClosureFormula(ReadClosureFormula(st->formula), g);
      if (!r) return Emit(env, {{"realized", false}}, false);
      return Emit(env, {{"realized", true},
                        {"tuple", Ids(g, std::span(r->tuple))},
                        {"closure", GraphJson(r->closure)},
                        {"marks", Ids(r->closure, std::span(r->marks))}});
    }});
  }
  {
    struct S { std::string graph, tuple; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("cltype", "Closure-type code of a tuple");
    app->add_option("-g,--graph", st->graph)->required();
    app->add_option("--tuple", st->tuple);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      return Emit(env, {{"code", ClosureTypeCode(g, ParseTuple(g, st->tuple))}});
    }});
  }
}

void AddGameModule(CLI::App& root, Registry& reg) {
  {
    struct S { std::string root_id, graph; int r = 1, s = 1; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("rs-value", "(r,s)-value of a rooted tree");
    app->add_option("-g,--graph", st->graph, "A forest")->required();
    app->add_option("--root", st->root_id)->required();
    app->add_option("-r", st->r)->check(CLI::PositiveNumber);
    app->add_option("-s", st->s)->check(CLI::NonNegativeNumber);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g = ReadGraphFile(st->graph);
      const RSValue v =
          RsValue(RootedTree::ComponentOf(g, g.IndexOf(st->root_id)), st->r, st->s);
      return Emit(env, {{"value", v.ToString()}, {"r", st->r}, {"s", st->s}});
    }});
  }
  {
    struct S { std::string g1, g2, start; int k = 1; GameFlags flags; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("ef", "k-round Ehrenfeucht-Fraisse game");
    app->add_option("--g1", st->g1)->required();
    app->add_option("--g2", st->g2)->required();
    app->add_option("-k", st->k)->check(CLI::NonNegativeNumber);
    app->add_option("--start", st->start, "Pebbled pairs a:b,c:d");
    st->flags.Bind(app);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g1 = ReadGraphFile(st->g1);
      const FiniteGraph g2 = ReadGraphFile(st->g2);
      std::vector<VertexPair> start;
      for (const auto& item : SplitIds(st->start)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw CLI::ValidationError("--start", "expected a:b, got " + item);
        }
        start.emplace_back(g1.IndexOf(item.substr(0, colon)),
                           g2.IndexOf(item.substr(colon + 1)));
      }
      const GameResult r =
          EfGame(g1, g2, st->k, start, st->flags.Options(env.cap));
      json out = {{"winner", ToString(r.winner)}, {"k", st->k}};
      if (st->flags.transcript) out["transcript"] = TranscriptJson(r, g1, g2);
      return Emit(env, out, r.winner == Winner::kDuplicator);
    }});
  }
  {
    struct S { std::string g1, g2, a, b; int k = 1; bool start_free = false;
               GameFlags flags; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("distance-ef", "Distance EF game started at (a, b)");
    app->add_option("--g1", st->g1)->required();
    app->add_option("--g2", st->g2)->required();
    app->add_option("-a", st->a)->required();
    app->add_option("-b", st->b)->required();
    app->add_option("-k", st->k)->check(CLI::PositiveNumber);
    app->add_flag("--start-free", st->start_free,
                  "Play k rounds after the start pair");
    st->flags.Bind(app);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g1 = ReadGraphFile(st->g1);
      const FiniteGraph g2 = ReadGraphFile(st->g2);
      GameOptions o = st->flags.Options(env.cap);
      o.start_consumes_round = !st->start_free;
      const GameResult r = DistanceEfGame(g1, g1.IndexOf(st->a), g2,
                                          g2.IndexOf(st->b), st->k, o);
      json out = {{"winner", ToString(r.winner)}, {"k", st->k}};
      if (st->flags.transcript) out["transcript"] = TranscriptJson(r, g1, g2);
      return Emit(env, out, r.winner == Winner::kDuplicator);
    }});
  }
  {
    struct S { std::string g1, g2, a, b; int k = 1, r = 1; GameFlags flags; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("k-similar", "k-similarity of r-neighbourhoods");
    app->add_option("--g1", st->g1)->required();
    app->add_option("--g2", st->g2)->required();
    app->add_option("-a", st->a)->required();
    app->add_option("-b", st->b)->required();
    app->add_option("-k", st->k)->check(CLI::PositiveNumber);
    app->add_option("-r", st->r)->check(CLI::NonNegativeNumber);
    st->flags.Bind(app);
    reg.push_back({app, [st](Env& env) {
      const FiniteGraph g1 = ReadGraphFile(st->g1);
      const FiniteGraph g2 = ReadGraphFile(st->g2);
      const bool v = KSimilar(g1, g1.IndexOf(st->a), g2, g2.IndexOf(st->b),
                              st->k, st->r, st->flags.Options(env.cap));
      return Emit(env, {{"similar", v}}, v);
    }});
  }
  {
    struct S { std::string g1, g2; int k = 1; GameFlags flags; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand(
        "sufficient", "Sufficient condition for a Duplicator win (true certifies)");
    app->add_option("--g1", st->g1)->required();
    app->add_option("--g2", st->g2)->required();
    app->add_option("-k", st->k)->check(CLI::PositiveNumber);
    st->flags.Bind(app);
    reg.push_back({app, [st](Env& env) {
      const bool v = DuplicatorSufficient(ReadGraphFile(st->g1),
                                          ReadGraphFile(st->g2), st->k,
                                          st->flags.Options(env.cap));
      return Emit(env, {{"certified", v}, {"radius", SimilarityRadius(st->k)}}, v);
    }});
  }
}

void AddGenericModule(CLI::App& root, Registry& reg) {
  {
    struct S { std::string alpha = "omega", out_path; int steps = 1;
               std::size_t size = 2; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("chain", "Finite stages of the generic chain");
    app->add_option("--alpha", st->alpha);
    app->add_option("--steps", st->steps)->check(CLI::NonNegativeNumber);
    app->add_option("--size-bound", st->size);
    app->add_option("-o,--out", st->out_path, "Write the last stage here");
    reg.push_back({app, [st](Env& env) {
      const GenericChain c =
          BuildGenericChain(ParseAlpha(st->alpha), st->steps, st->size, env.cap);
      json ledger = json::array();
      for (const auto& e : c.ledger) {
        ledger.push_back({{"step", e.step},
                          {"kind", e.kind},
                          {"structure", e.structure},
                          {"over", e.over},
                          {"added", e.added}});
      }
      json orders = json::array();
      for (const auto& s : c.stages) orders.push_back(s.order());
      if (!st->out_path.empty()) {
        WriteFile(st->out_path, GraphToJson(c.stages.back(), 2));
      }
      return Emit(env, {{"alpha", c.alpha.ToString()},
                        {"stage_orders", orders},
                        {"ledger", ledger},
                        {"pending", c.pending},
                        {"graph", GraphJson(c.stages.back())}});
    }});
  }
  {
    struct S { std::string alpha = "omega", out_path; std::size_t i = 0, size = 3; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("pseudofinite", "Disjoint union of the first i+1 members");
    app->add_option("--alpha", st->alpha);
    app->add_option("-i", st->i)->required();
    app->add_option("--size-bound", st->size);
    app->add_option("-o,--out", st->out_path);
    reg.push_back({app, [st](Env& env) {
      const ClassIndex alpha = ParseAlpha(st->alpha);
      const FiniteGraph b = PseudofiniteChain(alpha, st->i, st->size, env.cap);
      if (!st->out_path.empty()) WriteFile(st->out_path, GraphToJson(b, 2));
      return Emit(env, {{"i", st->i},
                        {"length", PseudofiniteChainLength(alpha, st->size, env.cap)},
                        {"graph", GraphJson(b)}});
    }});
  }
  {
    struct S { int n = 1, k = 1; std::optional<std::size_t> size_cap;
               std::optional<int> copies; std::string out_path; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("approximant", "Finite k-approximant for T_n");
    app->add_option("-n", st->n)->required()->check(CLI::NonNegativeNumber);
    app->add_option("-k", st->k)->check(CLI::PositiveNumber);
    app->add_option("--size-cap", st->size_cap);
    app->add_option("--copies", st->copies);
    app->add_option("-o,--out", st->out_path, "Write the graph here; stdout keeps the provenance");
    reg.push_back({app, [st](Env& env) {
      const Approximant a = BuildApproximant(
          st->n, st->k, {.size_cap = st->size_cap, .copies = st->copies}, env.cap);
      if (!st->out_path.empty()) WriteFile(st->out_path, GraphToJson(a.graph, 2));
      return Emit(env, ApproximantJson(a, st->out_path.empty()));
    }});
  }
  {
    struct S { int n = 1; std::string formula; std::optional<std::size_t> size_cap;
               std::optional<int> copies; bool no_cross = false;
               std::optional<int> max_rank; };
    auto st = std::make_shared<S>();
    auto* app = root.add_subcommand("decide", "Is the sentence in T_n");
    app->add_option("-n", st->n)->required()->check(CLI::NonNegativeNumber);
    app->add_option("-f,--formula", st->formula, "Text or @file")->required();
    app->add_option("--size-cap", st->size_cap);
    app->add_option("--copies", st->copies);
    app->add_flag("--no-cross-validate", st->no_cross);
    app->add_option("--max-rank", st->max_rank, "Raise the rank ceiling (3 is best effort)");
    reg.push_back({app, [st](Env& env) {
      std::vector<std::string> warnings;
      const Formula f = ParseSentence(FormulaText(st->formula), &warnings);
      for (const auto& w : warnings) env.err << "warning: " << w << "\n";
      DecideOptions o;
      o.primary = {.size_cap = st->size_cap, .copies = st->copies};
      o.cross_validate = !st->no_cross;
      o.capacity = env.cap;
      if (st->max_rank) o.capacity.decide_rank = *st->max_rank;
      const DecideResult r = Decide(f, st->n, o);
      json out = {{"in_theory", r.in_theory},
                  {"n", st->n},
                  {"rank", r.rank},
                  {"k", r.k},
                  {"cross_validated", r.secondary.has_value()},
                  {"primary", ApproximantJson(r.primary, false)}};
      if (r.secondary) out["secondary"] = ApproximantJson(*r.secondary, false);
      return Emit(env, out, r.in_theory);
    }});
  }
}

// CLI11 short options are single characters; accept -g1/-g2 as spelled in
// the usage examples.
std::vector<std::string> NormalizeArgs(std::span<const std::string> args) {
  std::vector<std::string> out(args.begin(), args.end());
  for (auto& a : out) {
    if (a == "-g1" || a == "-g2") a = "-" + a;
  }
  return out;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App root{"Finite combinatorics of generic tree classes", "gfl"};
  root.require_subcommand(1);
  root.set_help_all_flag("--help-all", "Help for every subcommand");
  Registry reg;
  AddGraphModule(root, reg);
  AddStrongModule(root, reg);
  AddIndependenceModule(root, reg);
  AddFormulaModule(root, reg);
  AddGameModule(root, reg);
  AddGenericModule(root, reg);

  std::vector<std::string> argv = NormalizeArgs(args);
  std::reverse(argv.begin(), argv.end());  // CLI11 consumes from the back
  const CLI::App* failing = &root;
  try {
    root.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return root.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return root.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    for (const CLI::App* sub : root.get_subcommands()) failing = sub;
    err << "error: " << e.what() << "\n\n" << failing->help();
    return kUsage;
  }

  Env env{out, err, {}};
  const Command* command = nullptr;
  for (const Command& c : reg) {
    if (c.app->parsed()) command = &c;
  }
  try {
    env.cap = Capacity::FromEnvironment();
    return command->run(env);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n\n" << command->app->help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInconsistent;
  }
}

}  // namespace gfl::cli
