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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/graph.h"
#include "gfl/graph_json.h"
#include "oracles.h"

namespace gfl {
namespace {

using oracle::FromMask;
using oracle::Make;
using oracle::ToMask;

TEST(GraphBuild, RejectsMalformedInputWithPositions) {
  try {
    FiniteGraph::Build({"a", "b", "a"}, {});
    FAIL();
  } catch (const MalformedGraphError& e) {
    EXPECT_EQ(e.position(), "vertices[2]");
  }
  try {
    FiniteGraph::Build({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL();
  } catch (const MalformedGraphError& e) {
    EXPECT_EQ(e.position(), "edges[1]");
  }
  EXPECT_THROW(FiniteGraph::Build({"a"}, {{"a", "a"}}), MalformedGraphError);
  EXPECT_THROW(FiniteGraph::Build({"a"}, {{"a", "z"}}), MalformedGraphError);
}

TEST(GraphJson, RoundTripsAndReportsPositions) {
  const FiniteGraph g = ParseGraphJson(
      R"({"vertices": ["c", "a", "b"], "edges": [["b", "a"], ["c", "b"]]})");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.id(0), "a");  // ids are stored sorted
  EXPECT_EQ(ParseGraphJson(GraphToJson(g)), g);
  try {
    ParseGraphJson(R"({"vertices": ["a"], "edges": [["a", "a"]]})");
    FAIL();
  } catch (const MalformedGraphError& e) {
    EXPECT_EQ(e.position(), "edges[0]");
  }
  EXPECT_THROW(ParseGraphJson("{"), MalformedGraphError);
  EXPECT_THROW(ParseGraphJson(R"({"vertices": [1]})"), MalformedGraphError);
}

TEST(Predimension, SmallExamples) {
  const FiniteGraph p3 = oracle::Path(3);
  EXPECT_EQ(Predimension(p3, {}), 0);
  EXPECT_EQ(Predimension(p3, p3.AllVertices()), 1);
  const FiniteGraph f = Make(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(Predimension(f, f.AllVertices()), 3);
  EXPECT_THROW(Predimension(p3, VertexSet{7}), UnknownVertexError);
}

TEST(Predimension, ForestsCountComponents) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const FiniteGraph f = oracle::RandomForest(rng, 1 + trial % 25);
    EXPECT_EQ(Predimension(f, f.AllVertices()), oracle::ComponentCount(f));
  }
}

TEST(ClassMembership, Examples) {
  const ClassReport tri = ClassMembership(oracle::Cycle(3), ClassIndex::Omega());
  EXPECT_FALSE(tri.member);
  ASSERT_TRUE(tri.violation);
  EXPECT_EQ(tri.violation->kind, ClassViolation::Kind::kCycle);
  EXPECT_EQ(tri.violation->vertices.size(), 3u);
  for (int a : {0, 1, 2}) EXPECT_FALSE(InClass(oracle::Cycle(3), ClassIndex::Finite(a)));

  const ClassReport star = ClassMembership(oracle::Star(4), ClassIndex::Finite(0));
  EXPECT_FALSE(star.member);
  EXPECT_EQ(star.violation->kind, ClassViolation::Kind::kOverDegree);
  EXPECT_EQ(star.violation->degree, 4);

  // Centre of degree 3 with one leg of length 2.
  const FiniteGraph spider = Make(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  const ClassReport s = ClassMembership(spider, ClassIndex::Finite(1));
  EXPECT_FALSE(s.member);
  EXPECT_EQ(s.violation->kind, ClassViolation::Kind::kLongPath);
  EXPECT_EQ(s.violation->vertices.front(), 0);
  EXPECT_EQ(s.violation->vertices.size(), 3u);
  EXPECT_TRUE(InClass(spider, ClassIndex::Finite(0)));
  EXPECT_TRUE(InClass(oracle::Star(9), ClassIndex::Finite(1)));

  for (int n = 1; n <= 4; ++n) {
    for (int len = 1; len <= 12; ++len) {
      EXPECT_TRUE(InClass(oracle::Path(len), ClassIndex::Finite(n)));
    }
  }
}

TEST(ClassMembership, AgreesWithPathWalkingOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const FiniteGraph g = trial % 3 == 0 ? oracle::RandomGraph(rng, n, 0.25)
                                         : oracle::RandomForest(rng, n, 0.85);
    for (int alpha : {-1, 0, 1, 2, 3}) {
      const ClassIndex idx = alpha < 0 ? ClassIndex::Omega() : ClassIndex::Finite(alpha);
      const ClassReport r = ClassMembership(g, idx);
      EXPECT_EQ(r.member, oracle::InClassBrute(g, alpha)) << GraphToJson(g);
      EXPECT_EQ(r.member, !r.violation.has_value());
    }
  }
}

TEST(ClassMembership, OmegaIsPositivePredimensionIsAcyclic) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 10;
    const FiniteGraph g = oracle::RandomGraph(rng, n, 0.2 + 0.05 * (trial % 5));
    bool positive = true;
    for (oracle::Mask m = 1; m <= oracle::Full(g) && positive; ++m) {
      positive = oracle::Delta(g, m) > 0;
    }
    EXPECT_EQ(InClass(g, ClassIndex::Omega()), positive);
    EXPECT_EQ(InClass(g, ClassIndex::Omega()), oracle::Acyclic(g));
  }
}

TEST(ClassMembership, HereditaryOnInducedSubgraphs) {
  for (int alpha : {-1, 0, 1, 2}) {
    const ClassIndex idx = alpha < 0 ? ClassIndex::Omega() : ClassIndex::Finite(alpha);
    for (const FiniteGraph& g : EnumerateClass(idx, 8)) {
      for (oracle::Mask m = 0; m <= oracle::Full(g); ++m) {
        ASSERT_TRUE(InClass(g.Induced(FromMask(m)), idx));
      }
    }
  }
}

TEST(Distance, MatchesBfs) {
  const FiniteGraph p3 = oracle::Path(3);
  EXPECT_EQ(Dist(p3, 0, 0), 0);
  EXPECT_EQ(Dist(p3, 0, 2), 2);
  EXPECT_EQ(Dist(Make(2, {}), 0, 1), kInfiniteDistance);
  EXPECT_THROW(Dist(p3, 0, 5), UnknownVertexError);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteGraph g = oracle::RandomGraph(rng, 12, 0.15);
    for (Vertex a = 0; a < 12; ++a) {
      const auto expect = oracle::Bfs(g, a);
      const auto got = DistancesFrom(g, a);
      for (Vertex b = 0; b < 12; ++b) {
        EXPECT_EQ(got[b], expect[b] < 0 ? kInfiniteDistance : expect[b]);
      }
    }
  }
}

TEST(Neighborhood, Examples) {
  const FiniteGraph p5 = oracle::Path(5);
  const RootedGraph r0 = Neighborhood(p5, 2, 0);
  EXPECT_EQ(r0.graph.order(), 1u);
  EXPECT_EQ(r0.graph.id(r0.root), p5.id(2));
  const RootedGraph r1 = Neighborhood(p5, 2, 1);
  EXPECT_EQ(r1.graph.ids(), (std::vector<std::string>{"v01", "v02", "v03"}));
  EXPECT_EQ(r1.graph.size(), 2u);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteGraph f = oracle::RandomForest(rng, 15, 0.8);
    const auto d = oracle::Bfs(f, 0);
    const int ecc = *std::max_element(d.begin(), d.end());
    const RootedGraph whole = Neighborhood(f, 0, ecc);
    oracle::Mask comp = 0;
    for (Vertex v = 0; v < 15; ++v) {
      if (d[v] >= 0) comp |= oracle::Mask{1} << v;
    }
    EXPECT_EQ(whole.graph, f.Induced(FromMask(comp)));
  }
}

TEST(SubdividedClique, Examples) {
  EXPECT_TRUE(ContainsSubdividedClique(oracle::Cycle(3), 3, 0));
  EXPECT_TRUE(ContainsSubdividedClique(oracle::Cycle(6), 3, 1));
  EXPECT_FALSE(ContainsSubdividedClique(oracle::Cycle(6), 3, 0));
  EXPECT_FALSE(ContainsSubdividedClique(oracle::Cycle(7), 3, 1));
  EXPECT_TRUE(ContainsSubdividedClique(oracle::Path(2), 2, 0));
  EXPECT_TRUE(ContainsSubdividedClique(oracle::Path(3), 2, 1));
  // K4 and a subdivided K4.
  const FiniteGraph k4 = Make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_TRUE(ContainsSubdividedClique(k4, 4, 0));
  const FiniteGraph sub = Make(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(ContainsSubdividedClique(sub, 4, 0));
  EXPECT_TRUE(ContainsSubdividedClique(sub, 4, 1));
  EXPECT_THROW(ContainsSubdividedClique(oracle::Path(40), 3, 1), CapacityError);
  EXPECT_THROW(ContainsSubdividedClique(oracle::Path(4), 1, 1), PreconditionError);
}

TEST(SubdividedClique, ForestsAreFlat) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const FiniteGraph f = oracle::RandomForest(rng, 4 + trial % 20, 0.9);
    for (int r = 0; r <= 4; ++r) EXPECT_FALSE(ContainsSubdividedClique(f, 3, r));
  }
}

std::vector<std::pair<int, int>> Permuted(const FiniteGraph& g,
                                          const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return e;
}

TEST(CanonicalCode, AgreesWithIsomorphismSearch) {
  std::mt19937_64 rng(13);
  std::vector<std::pair<FiniteGraph, std::vector<Vertex>>> items;
  for (const FiniteGraph& g : EnumerateClass(ClassIndex::Omega(), 7)) {
    for (int copy = 0; copy < 3; ++copy) {
      std::vector<int> perm(g.order());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const FiniteGraph h = Make(g.order(), Permuted(g, perm));
      std::vector<Vertex> marks;
      const int nm = g.empty() ? 0 : static_cast<int>(rng() % 3);
      for (int i = 0; i < nm; ++i) marks.push_back(rng() % g.order());
      items.emplace_back(h, marks);
    }
  }
  std::size_t equal = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string ci = CanonicalCode(items[i].first, items[i].second);
    for (std::size_t j = i; j < items.size(); ++j) {
      const auto& [g2, m2] = items[j];
      if (g2.order() != items[i].first.order()) continue;
      const bool same = ci == CanonicalCode(g2, m2);
      ASSERT_EQ(same, oracle::Isomorphic(items[i].first, items[i].second, g2, m2))
          << GraphToJson(items[i].first) << " vs " << GraphToJson(g2);
      equal += same;
    }
  }
  EXPECT_GT(equal, items.size());
}

TEST(CanonicalCode, Examples) {
  const FiniteGraph two = Make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  EXPECT_EQ(CanonicalCode(two.Induced({0, 1, 2})),
            CanonicalCode(two.Induced({3, 4, 5}).Prefixed("z")));
  const FiniteGraph p3 = oracle::Path(3);
  EXPECT_EQ(CanonicalCode(p3, std::vector<Vertex>{0}),
            CanonicalCode(p3, std::vector<Vertex>{2}));
  EXPECT_NE(CanonicalCode(p3, std::vector<Vertex>{0}),
            CanonicalCode(p3, std::vector<Vertex>{1}));
  EXPECT_THROW(CanonicalCode(oracle::Cycle(4)), NotAForestError);
}

TEST(EnumerateClass, CountsMatchKnownSequences) {
  // Unlabeled forests and trees by vertex count.
  const std::vector<int> forests = {1, 1, 2, 3, 6, 10, 20, 37, 76, 153, 329};
  const std::vector<int> trees = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  // Trees with maximum degree at most 3.
  const std::vector<int> cubic = {1, 1, 1, 1, 2, 2, 4, 6, 11, 18, 37};
  std::vector<int> f(11), t(11), c(11);
  for (const FiniteGraph& g : EnumerateClass(ClassIndex::Omega(), 10)) ++f[g.order()];
  for (const FiniteGraph& g : EnumerateTrees(ClassIndex::Omega(), 10)) ++t[g.order()];
  for (const FiniteGraph& g : EnumerateTrees(ClassIndex::Finite(0), 10)) ++c[g.order()];
  EXPECT_EQ(f, forests);
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(t[n], trees[n]) << n;
    EXPECT_EQ(c[n], cubic[n]) << n;
  }
}

TEST(EnumerateClass, SmallListingAndInvariants) {
  const auto small = EnumerateClass(ClassIndex::Omega(), 2);
  ASSERT_EQ(small.size(), 4u);
  EXPECT_TRUE(small[0].empty());
  EXPECT_EQ(small[1].order(), 1u);
  EXPECT_EQ(small[2].order() + small[3].order(), 4u);
  EXPECT_EQ(small[2].size() + small[3].size(), 1u);

  for (int alpha : {-1, 0, 1, 2}) {
    const ClassIndex idx = alpha < 0 ? ClassIndex::Omega() : ClassIndex::Finite(alpha);
    const auto list = EnumerateClass(idx, 8);
    std::set<std::string> codes;
    for (std::size_t i = 0; i < list.size(); ++i) {
      EXPECT_TRUE(oracle::InClassBrute(list[i], alpha));
      EXPECT_TRUE(codes.insert(CanonicalCode(list[i])).second);
      if (i > 0) {
        EXPECT_LE(list[i - 1].order(), list[i].order());
        if (list[i - 1].order() == list[i].order()) {
          EXPECT_LT(CanonicalCode(list[i - 1]), CanonicalCode(list[i]));
        }
      }
    }
  }
  for (const FiniteGraph& g : EnumerateClass(ClassIndex::Finite(0), 5)) {
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
      EXPECT_LE(g.degree(v), 3);
    }
  }
  EXPECT_THROW(EnumerateClass(ClassIndex::Omega(), 13), CapacityError);
}

TEST(EnumerateClass, CompleteAgainstLabeledGraphs) {
  // Every labeled forest on <= 6 vertices has its code in the enumeration.
  for (int alpha : {-1, 0, 1}) {
    const ClassIndex idx = alpha < 0 ? ClassIndex::Omega() : ClassIndex::Finite(alpha);
    std::set<std::string> listed;
    for (const FiniteGraph& g : EnumerateClass(idx, 6)) listed.insert(CanonicalCode(g));
    std::set<std::string> seen;
    for (int n = 0; n <= 6; ++n) {
      for (const FiniteGraph& g : oracle::AllLabeledGraphs(n)) {
        if (oracle::InClassBrute(g, alpha)) seen.insert(CanonicalCode(g));
      }
    }
    EXPECT_EQ(seen, listed);
  }
}

TEST(DisjointUnion, PrefixesAndPreservesEdges) {
  const std::vector<FiniteGraph> parts = {oracle::Path(2), oracle::Path(3)};
  const FiniteGraph u = DisjointUnion(parts);
  EXPECT_EQ(u.order(), 5u);
  EXPECT_EQ(u.size(), 3u);
  EXPECT_EQ(oracle::ComponentCount(u), 2);
  EXPECT_TRUE(u.Find("p0.v00").has_value());
  EXPECT_TRUE(u.Find("p1.v02").has_value());
}

TEST(ClassIndex, Parsing) {
  EXPECT_TRUE(ClassIndex::Parse("omega").is_omega());
  EXPECT_TRUE(ClassIndex::Parse("w").is_omega());
  EXPECT_EQ(ClassIndex::Parse("3").value(), 3);
  EXPECT_THROW(ClassIndex::Parse("-1"), PreconditionError);
  EXPECT_THROW(ClassIndex::Parse("x"), PreconditionError);
  EXPECT_THROW(ClassIndex::Omega().value(), PreconditionError);
}

}  // namespace
}  // namespace gfl
