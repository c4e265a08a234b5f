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

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/graph_json.h"
#include "gfl/independence.h"
#include "gfl/strong.h"
#include "oracles.h"

namespace gfl {
namespace {

using oracle::FromMask;
using oracle::Full;
using oracle::Make;
using oracle::Mask;
using oracle::ToMask;

TEST(ComponentOver, Examples) {
  const FiniteGraph p3 = oracle::Path(3);
  EXPECT_EQ(ComponentOver(p3, 0, {1}), (VertexSet{0}));
  EXPECT_EQ(ComponentOver(p3, 0, {}), (VertexSet{0, 1, 2}));
  EXPECT_EQ(ComponentOver(p3, 0, {2}), (VertexSet{0, 1}));
  EXPECT_THROW(ComponentOver(p3, 1, {1}), PreconditionError);
}

TEST(ComponentOver, OutsideTheClosureItIsTheClosureOfTheVertex) {
  for (const FiniteGraph& g : EnumerateClass(ClassIndex::Omega(), 7)) {
    const Mask full = Full(g);
    for (Mask a = 0; a <= full; ++a) {
      const VertexSet cl = ClosureStar(g, FromMask(a)).closure;
      const VertexSet rest = g.AllVertices().Minus(FromMask(a));
      const FiniteGraph h = g.Induced(rest);
      for (Vertex x : rest) {
        if (cl.contains(x)) continue;
        const VertexSet in_h = ClosureStar(h, h.Set({g.id(x)})).closure;
        ASSERT_EQ(ComponentOver(g, x, FromMask(a)), g.Set(h.Ids(in_h)));
      }
    }
  }
}

TEST(DIndependent, Examples) {
  const FiniteGraph g = Make(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(DIndependent(g, {0}, {}, {2}).independent);
  const DIndependenceReport same = DIndependent(g, {0}, {}, {0});
  EXPECT_FALSE(same.independent);
  // d drops from 1 to 0 as well, so both clauses are named.
  EXPECT_EQ(same.failed_clause, "a,b");
  EXPECT_TRUE(DIndependent(g, {0, 2}, {1, 3}, {1}).independent);
  // One component seen through b and A: the dimension drops.
  const DIndependenceReport drop = DIndependent(g, {0}, {}, {1});
  EXPECT_FALSE(drop.independent);
  EXPECT_EQ(drop.failed_clause, "a");
  EXPECT_EQ(drop.d_over_c, 1);
  EXPECT_EQ(drop.d_over_ac, 0);
  // Paths from b and from A to C meet at the centre of a star.
  const DIndependenceReport star = DIndependent(oracle::Star(3), {1}, {2}, {3});
  EXPECT_EQ(star.failed_clause, "b");
  EXPECT_EQ(star.cl_bc, (VertexSet{0, 1, 2}));
}

TEST(DIndependent, DegeneratesWhenAInsideC) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteGraph g = oracle::RandomForest(rng, 8, 0.6);
    const Mask c = rng() & Full(g);
    const Mask a = rng() & c;
    const Mask b = rng() & Full(g);
    EXPECT_TRUE(DIndependent(g, FromMask(b), FromMask(c), FromMask(a)).independent);
  }
}

TEST(DIndependent, MonotoneInA) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 3000; ++trial) {
    const FiniteGraph g = oracle::RandomForest(rng, 8, 0.6);
    const Mask b = rng() & Full(g);
    const Mask c = rng() & rng() & Full(g);
    const Mask a = rng() & Full(g);
    if (!DIndependent(g, FromMask(b), FromMask(c), FromMask(a)).independent) continue;
    const Mask smaller = a & rng();
    ASSERT_TRUE(DIndependent(g, FromMask(b), FromMask(c), FromMask(smaller)).independent)
        << GraphToJson(g);
  }
}

TEST(IsFreeJoin, Examples) {
  const FiniteGraph g = Make(4, {{0, 1}, {2, 3}});
  EXPECT_TRUE(IsFreeJoin(g, {0, 1}, {}, {2, 3}));
  const FiniteGraph h = Make(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(IsFreeJoin(h, {0, 1}, {0}, {0, 2}));
  EXPECT_THROW(IsFreeJoin(g, {0, 1}, {0}, {1, 2}), PreconditionError);
  // Not weakly closed as a union.
  const FiniteGraph p3 = oracle::Path(3);
  EXPECT_FALSE(IsFreeJoin(p3, {0}, {}, {2}));
}

TEST(IsFreeJoin, EquivalentToDIndependenceOnConvexSets) {
  for (const FiniteGraph& g : EnumerateClass(ClassIndex::Omega(), 6)) {
    std::vector<Mask> convex;
    for (Mask m = 0; m <= Full(g); ++m) {
      if (oracle::WeaklyClosed(g, m, Full(g))) convex.push_back(m);
    }
    for (Mask b1 : convex) {
      for (Mask b2 : convex) {
        const Mask c = b1 & b2;
        ASSERT_EQ(IsFreeJoin(g, FromMask(b1), FromMask(c), FromMask(b2)),
                  DIndependent(g, FromMask(b1), FromMask(c), FromMask(b2)).independent)
            << GraphToJson(g) << " " << b1 << " " << b2;
      }
    }
  }
}

TEST(AclOracle, RejectsBadFunctions) {
  const FiniteGraph g = oracle::Path(6);
  EXPECT_THROW(AclOracle(g, [](const VertexSet&) { return VertexSet{}; }),
               PreconditionError);
  EXPECT_THROW(AclOracle(g,
                         [](const VertexSet& x) {
                           // Adds the successor of each vertex once: not idempotent.
                           std::vector<Vertex> out(x.begin(), x.end());
                           for (Vertex v : x) {
                             if (v + 1 < 6) out.push_back(v + 1);
                           }
                           return VertexSet(out);
                         }),
               PreconditionError);
  EXPECT_THROW(AclOracle(g,
                         [](const VertexSet& x) {
                           return x.size() == 1 ? VertexSet{0, 1, 2, 3, 4, 5} : x;
                         }),
               PreconditionError);
  EXPECT_NO_THROW(AclOracle(g, [](const VertexSet& x) { return x; }));
}

TEST(AclOracle, TableClosesUnderRules) {
  const FiniteGraph g = oracle::Path(5);
  const AclOracle acl = AclOracle::FromTable(
      g, {{VertexSet{0}, VertexSet{1}}, {VertexSet{0, 1}, VertexSet{4}}, {{}, VertexSet{3}}});
  EXPECT_EQ(acl({}), (VertexSet{3}));
  EXPECT_EQ(acl({0}), (VertexSet{0, 1, 3, 4}));
  EXPECT_EQ(acl({2}), (VertexSet{2, 3}));
  EXPECT_EQ(AclOracle::Identity(g)({1, 2}), (VertexSet{1, 2}));
}

TEST(NonforkingOver, Examples) {
  const FiniteGraph g = Make(5, {{0, 1}, {2, 3}});
  const AclOracle id = AclOracle::Identity(g);
  EXPECT_TRUE(NonforkingOver(g, {0}, {}, {2, 3}, id));
  EXPECT_FALSE(NonforkingOver(g, {2}, {}, {2, 3}, id));
  EXPECT_TRUE(NonforkingOver(g, {2, 3}, {2, 3}, {2, 3, 4}, id));
  EXPECT_FALSE(NonforkingOver(g, {1}, {}, {0}, id));
  EXPECT_THROW(NonforkingOver(g, {0}, {2}, {3}, id), PreconditionError);
  const AclOracle grows = AclOracle::FromTable(g, {{VertexSet{2}, VertexSet{3}}});
  EXPECT_THROW(NonforkingOver(g, {0}, {2}, {2, 3}, grows), PreconditionError);
}

TEST(NonforkingOver, ShrinkingBPreservesIt) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const FiniteGraph g = oracle::RandomForest(rng, 8, 0.5);
    const AclOracle id = AclOracle::Identity(g);
    const Mask a = rng() & rng() & Full(g);
    const Mask b = a | (rng() & Full(g));
    const Mask t = rng() & Full(g);
    if (!NonforkingOver(g, FromMask(t), FromMask(a), FromMask(b), id)) continue;
    const Mask b2 = a | (b & rng());
    ASSERT_TRUE(NonforkingOver(g, FromMask(t), FromMask(a), FromMask(b2), id));
  }
}

TEST(ForkingCase, Cases) {
  // a - b - x with A = {a}, B = {a, b}.
  const FiniteGraph p = oracle::Path(3);
  const AclOracle id = AclOracle::Identity(p);
  const ForkingReport three = ForkingCase(p, 2, {0}, {0, 1}, id);
  EXPECT_EQ(three.case_number, 3);
  EXPECT_EQ(three.path, (std::vector<Vertex>{2, 1, 0}));
  EXPECT_EQ(ForkingCase(p, 1, {0}, {0, 1}, id).case_number, 2);
  EXPECT_EQ(ForkingCase(p, 0, {0}, {0, 1}, id).case_number, 0);
  // With b algebraic over A neither case 2 nor case 3 applies.
  const AclOracle alg = AclOracle::FromTable(p, {{VertexSet{0}, VertexSet{1}}});
  EXPECT_EQ(ForkingCase(p, 2, {0}, {0, 1}, alg).case_number, 0);
  EXPECT_EQ(ForkingCase(p, 1, {0}, {0, 1}, alg).case_number, 0);

  // Component meeting B but not A.
  const FiniteGraph g = Make(3, {{1, 2}});
  EXPECT_EQ(ForkingCase(g, 2, {0}, {0, 1}, AclOracle::Identity(g)).case_number, 1);
  // Hypotheses.
  const FiniteGraph p4 = oracle::Path(4);
  EXPECT_THROW(ForkingCase(p4, 1, {0}, {0, 3}, AclOracle::Identity(p4)),
               PreconditionError);
}

TEST(ForkingCase, CaseOneMatchesNonforking) {
  // Over A = acl(A) = A, a vertex outside cl*(A) forks exactly in case 1.
  for (const FiniteGraph& g : EnumerateClass(ClassIndex::Omega(), 6)) {
    const AclOracle id = AclOracle::Identity(g);
    for (Mask b = 0; b <= Full(g); ++b) {
      if (!oracle::WeaklyClosed(g, b, Full(g))) continue;
      for (Mask a = b;; a = (a - 1) & b) {
        if (oracle::WeaklyClosed(g, a, b)) {
          const VertexSet cla = ClosureStar(g, FromMask(a)).closure;
          for (Vertex x = 0; static_cast<std::size_t>(x) < g.order(); ++x) {
            if (cla.contains(x)) continue;
            const bool forks =
                !NonforkingOver(g, {x}, FromMask(a), FromMask(b), id);
            ASSERT_EQ(ForkingCase(g, x, FromMask(a), FromMask(b), id).case_number == 1,
                      forks);
          }
        }
        if (a == 0) break;
      }
    }
  }
}

}  // namespace
}  // namespace gfl
