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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/formula.h"
#include "gfl/generic.h"
#include "gfl/graph_json.h"
#include "gfl/rs_value.h"
#include "gfl/strong.h"
#include "oracles.h"

namespace gfl {
namespace {

using oracle::Make;

FiniteGraph Named(std::vector<std::string> ids,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  return FiniteGraph::Build(std::move(ids), edges);
}

VertexSet IdsIn(const FiniteGraph& big, const FiniteGraph& small) {
  std::vector<Vertex> out;
  for (const std::string& id : small.ids()) out.push_back(big.IndexOf(id));
  return VertexSet(std::move(out));
}

int Alpha(ClassIndex c) { return c.is_omega() ? -1 : c.value(); }

TEST(FreeJoin, Examples) {
  const FiniteGraph m1 = Named({"a", "b"}, {{"a", "b"}});
  const FiniteGraph m2 = Named({"c"}, {});
  const FiniteGraph u = FreeJoin(m1, {}, m2);
  EXPECT_EQ(u.ids(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(u.size(), 1u);
  EXPECT_EQ(GraphToJson(FreeJoin(m1, m1, m1)), GraphToJson(m1));

  const FiniteGraph left = Named({"a", "b", "x"}, {{"a", "x"}});
  const FiniteGraph right = Named({"a", "b", "y"}, {{"b", "y"}});
  const FiniteGraph base = Named({"a", "b"}, {});
  const FiniteGraph j = FreeJoin(left, base, right);
  EXPECT_EQ(j.order(), 4u);
  EXPECT_EQ(j.size(), 2u);
  for (Vertex w : j.neighbors(j.IndexOf("x"))) EXPECT_NE(j.id(w), "y");
}

TEST(FreeJoin, Errors) {
  const FiniteGraph m1 = Named({"a", "b"}, {{"a", "b"}});
  const FiniteGraph m2 = Named({"a", "c"}, {});
  EXPECT_THROW(FreeJoin(m1, {}, m2), PreconditionError);
  EXPECT_THROW(FreeJoin(m1, Named({"a", "c"}, {}), m2), PreconditionError);
  // Shared part with disagreeing edges.
  const FiniteGraph m3 = Named({"a", "b"}, {});
  EXPECT_THROW(FreeJoin(m1, m3, m3), PreconditionError);
  EXPECT_THROW(FreeJoin(m1, m1, m3), PreconditionError);
}

TEST(FreeJoin, FullAmalgamation) {
  std::mt19937_64 rng(127);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const FiniteGraph b = oracle::RandomForest(rng, 2 + trial % 5, 0.7);
    const oracle::Mask full = oracle::Full(b);
    const oracle::Mask a = static_cast<oracle::Mask>(rng()) & full;
    if (!oracle::Closed(b, a, full)) continue;
    const FiniteGraph base = b.Induced(oracle::FromMask(a));
    // C extends the base by pendant growth, so C[A] = B[A].
    std::vector<std::string> ids = base.ids();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : base.edges()) edges.push_back({base.id(u), base.id(v)});
    const int extra = static_cast<int>(rng() % 4);
    for (int i = 0; i < extra; ++i) {
      const std::string fresh = "c" + std::to_string(i);
      if (!ids.empty() && rng() % 3 != 0) edges.push_back({ids[rng() % ids.size()], fresh});
      ids.push_back(fresh);
    }
    const FiniteGraph c = Named(ids, edges);
    for (int alpha : {-1, 0, 1, 2}) {
      if (!oracle::InClassBrute(b, alpha) || !oracle::InClassBrute(c, alpha)) continue;
      const FiniteGraph j = FreeJoin(b, base, c);
      ASSERT_TRUE(oracle::InClassBrute(j, alpha)) << GraphToJson(j);
      ASSERT_TRUE(oracle::Closed(j, oracle::ToMask(IdsIn(j, c)), oracle::Full(j)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(GenericChain, FirstStep) {
  const GenericChain ch = BuildGenericChain(ClassIndex::Omega(), 1, 1);
  ASSERT_EQ(ch.stages.size(), 2u);
  EXPECT_TRUE(ch.stages[0].empty());
  EXPECT_EQ(ch.stages[1].order(), 1u);
  EXPECT_EQ(ch.stages[1].size(), 0u);
  ASSERT_EQ(ch.ledger.size(), 1u);
  EXPECT_EQ(ch.ledger[0].kind, "universality");
  EXPECT_EQ(ch.ledger[0].step, 1);
}

TEST(GenericChain, StagesAreClosedMembers) {
  for (ClassIndex alpha : {ClassIndex::Omega(), ClassIndex::Finite(0), ClassIndex::Finite(1)}) {
    const GenericChain ch = BuildGenericChain(alpha, 14, 3);
    for (std::size_t i = 0; i + 1 < ch.stages.size(); ++i) {
      const FiniteGraph& next = ch.stages[i + 1];
      ASSERT_TRUE(oracle::InClassBrute(next, Alpha(alpha)));
      const VertexSet prev = IdsIn(next, ch.stages[i]);
      ASSERT_TRUE(IsClosed(next, prev, next.AllVertices()));
      ASSERT_TRUE(oracle::Closed(next, oracle::ToMask(prev), oracle::Full(next)));
    }
  }
}

TEST(GenericChain, LedgerIsFifo) {
  const std::size_t bound = 3;
  const GenericChain ch = BuildGenericChain(ClassIndex::Finite(1), 40, bound);
  const std::size_t universal = ch.catalogue.size();
  ASSERT_GE(ch.ledger.size(), universal);
  std::size_t queued = universal;
  std::map<std::vector<std::string>, std::size_t> copy_step;
  std::size_t last_source = 0;
  for (std::size_t i = 0; i < ch.ledger.size(); ++i) {
    const ChainLedgerEntry& e = ch.ledger[i];
    EXPECT_EQ(e.step, static_cast<int>(i) + 1);
    if (i < universal) {
      // Universality obligations come first, in catalogue order.
      ASSERT_EQ(e.kind, "universality");
      ASSERT_EQ(e.structure, i);
      EXPECT_EQ(e.added.size(), ch.catalogue[i].order());
      copy_step[e.added] = i;
      for (const FiniteGraph& d : ch.catalogue) {
        if (ch.catalogue[i].order() + d.order() <= bound) ++queued;
      }
    } else {
      ASSERT_EQ(e.kind, "homogeneity");
      // Homogeneity obligations are served in the order their copies were made.
      const auto it = copy_step.find(e.over);
      ASSERT_NE(it, copy_step.end());
      EXPECT_GE(it->second, last_source);
      last_source = it->second;
    }
  }
  EXPECT_EQ(ch.ledger.size() + ch.pending, queued);
}

TEST(GenericChain, UniversalForSmallStructures) {
  for (ClassIndex alpha : {ClassIndex::Omega(), ClassIndex::Finite(0)}) {
    const GenericChain ch = BuildGenericChain(alpha, 3, 2);
    const FiniteGraph& last = ch.stages.back();
    for (const Formula& f : UnivAxioms(alpha, 2, 6)) {
      EXPECT_TRUE(Evaluate(last, f)) << f.ToString();
    }
  }
}

TEST(Pseudofinite, Stages) {
  for (ClassIndex alpha : {ClassIndex::Omega(), ClassIndex::Finite(0), ClassIndex::Finite(2)}) {
    const auto members = EnumerateClass(alpha, 4);
    ASSERT_EQ(PseudofiniteChainLength(alpha, 4), members.size());
    EXPECT_TRUE(PseudofiniteChain(alpha, 0, 4).empty());
    int components = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
      components += oracle::ComponentCount(members[i]);
      const FiniteGraph b = PseudofiniteChain(alpha, i, 4);
      ASSERT_EQ(oracle::ComponentCount(b), components);
      ASSERT_TRUE(oracle::InClassBrute(b, Alpha(alpha)));
    }
    EXPECT_THROW(PseudofiniteChain(alpha, members.size(), 4), PreconditionError);
  }
}

TEST(Approximant, Shape) {
  for (int n : {0, 1, 2}) {
    const Approximant ap = BuildApproximant(n, 2);
    EXPECT_EQ(ap.r, 4);
    EXPECT_EQ(ap.s, 1);
    EXPECT_EQ(ap.size_cap, 10u);
    EXPECT_EQ(ap.copies, 2);
    EXPECT_TRUE(InClass(ap.graph, ClassIndex::Finite(n)));
    std::size_t total = 0;
    std::set<std::string> codes;
    for (const FiniteGraph& t : ap.trees) {
      total += t.order();
      EXPECT_TRUE(codes.insert(CanonicalCode(t)).second);
    }
    EXPECT_EQ(ap.graph.order(), total * 2);
    // Each listed value is realized at its root and values are distinct.
    std::set<std::string> seen;
    for (const ApproximantRepresentative& rep : ap.values) {
      const FiniteGraph& t = ap.trees.at(rep.tree);
      const RSValue v = RsValue(RootedTree::Make(t, t.IndexOf(rep.root)), ap.r, ap.s);
      EXPECT_EQ(v.ToString(), rep.value);
      EXPECT_TRUE(seen.insert(rep.value).second);
    }
    // Every vertex of the approximant realizes a listed value.
    for (const RSValue& v : RsValuesOfForest(ap.graph, ap.r, ap.s)) {
      EXPECT_TRUE(seen.contains(v.ToString()));
    }
  }
}

TEST(Approximant, DeterministicAndGuarded) {
  EXPECT_EQ(GraphToJson(BuildApproximant(1, 2).graph), GraphToJson(BuildApproximant(1, 2).graph));
  const Approximant custom = BuildApproximant(1, 1, {.size_cap = 3, .copies = 3});
  EXPECT_EQ(custom.size_cap, 3u);
  EXPECT_EQ(custom.copies, 3);
  EXPECT_THROW(BuildApproximant(1, 0), PreconditionError);
  EXPECT_THROW(BuildApproximant(-1, 1), PreconditionError);
  EXPECT_THROW(BuildApproximant(1, 3), CapacityError);
}

TEST(Decide, Examples) {
  for (int n : {0, 1, 2}) {
    const DecideResult yes =
        Decide(ParseSentence("exists x. exists y. (~x=y & ~R(x,y))"), n);
    EXPECT_TRUE(yes.in_theory);
    EXPECT_EQ(yes.rank, 2);
    EXPECT_EQ(yes.k, 2);
    EXPECT_TRUE(yes.secondary.has_value());
    EXPECT_FALSE(Decide(ParseSentence("exists x. R(x,x)"), n).in_theory);
    // Rank three is opt-in and needs a smaller enumeration cap.
    DecideOptions three;
    three.primary.size_cap = 10;
    three.capacity.decide_rank = 3;
    EXPECT_FALSE(
        Decide(ParseSentence("exists x. exists y. exists z. (R(x,y)&R(y,z)&R(z,x))"), n, three)
            .in_theory);
  }
  EXPECT_TRUE(Decide(ParseSentence("true"), 1).in_theory);
  EXPECT_EQ(Decide(ParseSentence("true"), 1).k, 1);
}

TEST(Decide, Errors) {
  EXPECT_THROW(Decide(ParseFormula("R(x,y)"), 1), PreconditionError);
  EXPECT_THROW(Decide(ParseSentence("exists x. exists y. exists z. x = z"), 1), CapacityError);
}

TEST(Decide, KnownTruthsOfTheBoundedDegreeGenerics) {
  // Every vertex has a non-neighbour, some vertex is isolated, some vertex
  // has two neighbours.
  for (int n : {0, 1, 2}) {
    EXPECT_TRUE(Decide(ParseSentence("forall x. exists y. (~x = y & ~R(x,y))"), n).in_theory);
    EXPECT_TRUE(Decide(ParseSentence("exists x. forall y. ~R(x,y)"), n).in_theory);
    EXPECT_FALSE(Decide(ParseSentence("forall x. exists y. R(x,y)"), n).in_theory);
  }
}

}  // namespace
}  // namespace gfl
