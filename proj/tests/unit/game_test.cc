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

#include <map>
#include <random>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "gfl/formula.h"
#include "gfl/game.h"
#include "gfl/graph_json.h"
#include "gfl/rs_value.h"
#include "oracles.h"

namespace gfl {
namespace {

using oracle::Make;

constexpr Winner kDup = Winner::kDuplicator;
constexpr Winner kSpo = Winner::kSpoiler;

FiniteGraph Edge() { return Make(2, {{0, 1}}); }

RootedGraph Hood(const FiniteGraph& g, Vertex v, int r) { return Neighborhood(g, v, r); }

TEST(RsValue, Examples) {
  const RootedTree point = RootedTree::Make(Make(1, {}), 0);
  for (int s = 0; s <= 4; ++s) EXPECT_EQ(RsValue(point, 1, s).ToString(), "0");
  for (int s = 1; s <= 4; ++s) {
    const RootedTree star = RootedTree::Make(oracle::Star(s + 1), 0);
    EXPECT_EQ(RsValue(star, 1, s).ToString(), "inf");
    EXPECT_EQ(RsValue(star, 1, s).count(), RSValue::kMany);
    EXPECT_EQ(RsValue(star, 1, s + 1).ToString(), std::to_string(s + 1));
  }
  const RootedTree cherry = RootedTree::Make(oracle::Star(2), 0);
  const RSValue v = RsValue(cherry, 2, 3);
  EXPECT_EQ(v.ToString(), "{0:2}");
  ASSERT_EQ(v.entries().size(), 1u);
  EXPECT_EQ(v.CountOf(RsValue(point, 1, 3)), 2);
  EXPECT_EQ(v.CountOf(RsValue(RootedTree::Make(Edge(), 0), 1, 3)), 0);
  // Leaves of the cherry see the centre as their only child.
  EXPECT_EQ(RsValue(RootedTree::Make(oracle::Star(2), 1), 2, 3).ToString(), "{1:1}");
}

TEST(RsValue, Interning) {
  const RSValue a = RsValue(RootedTree::Make(oracle::Path(5), 0), 3, 2);
  const RSValue b = RsValue(RootedTree::Make(oracle::Path(5), 4), 3, 2);
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(a == RsValue(RootedTree::Make(oracle::Path(5), 1), 3, 2));
  EXPECT_FALSE(a < b);
}

TEST(RsValue, Errors) {
  EXPECT_THROW(RootedTree::Make(Make(2, {}), 0), PreconditionError);
  EXPECT_THROW(RootedTree::Make(oracle::Cycle(3), 0), Error);
  EXPECT_THROW(RsValue(RootedTree::Make(Edge(), 0), 0, 1), PreconditionError);
  EXPECT_THROW(RsValue(RootedTree::Make(Edge(), 0), 1, -1), PreconditionError);
}

TEST(RsValue, OnlyTheRadiusMatters) {
  // A long path below depth r does not change the value.
  for (int r = 1; r <= 3; ++r) {
    const RSValue shortp = RsValue(RootedTree::Make(oracle::Path(r + 1), 0), r, 2);
    const RSValue longp = RsValue(RootedTree::Make(oracle::Path(r + 6), 0), r, 2);
    EXPECT_TRUE(shortp == longp);
    const RSValue shorter = RsValue(RootedTree::Make(oracle::Path(r), 0), r, 2);
    EXPECT_FALSE(shortp == shorter);
  }
}

TEST(RsValue, InvariantUnderRootedIsomorphism) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 60; ++trial) {
    const FiniteGraph g = oracle::RandomForest(rng, 14, 0.8);
    for (int r = 1; r <= 3; ++r) {
      const int s = 1 + trial % 3;
      const auto values = RsValuesOfForest(g, r, s);
      std::map<std::string, RSValue> by_code;
      for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        const Vertex mark[] = {v};
        const auto [it, fresh] = by_code.emplace(CanonicalCode(g, mark), values[v]);
        if (!fresh) {
          ASSERT_TRUE(it->second == values[v]);
        }
        ASSERT_TRUE(values[v] == RsValue(RootedTree::ComponentOf(g, v), r, s));
      }
    }
  }
}

TEST(RsValue, LargerCapOnlyRefines) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const FiniteGraph g = oracle::RandomTree(rng, 20);
    for (int r = 1; r <= 3; ++r) {
      for (int s = 0; s <= 2; ++s) {
        const auto lo = RsValuesOfForest(g, r, s);
        const auto hi = RsValuesOfForest(g, r, s + 1);
        for (std::size_t a = 0; a < lo.size(); ++a) {
          for (std::size_t b = 0; b < lo.size(); ++b) {
            if (!(lo[a] == lo[b])) {
              ASSERT_FALSE(hi[a] == hi[b]);
            }
          }
        }
      }
    }
  }
}

TEST(EfGame, Examples) {
  EXPECT_EQ(EfGame(Edge(), Make(2, {}), 2).winner, kSpo);
  EXPECT_EQ(EfGame(Edge(), Make(2, {}), 1).winner, kDup);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(EfGame(oracle::Path(5), oracle::Path(5), k).winner, kDup);
  }
  EXPECT_EQ(EfGame(oracle::Cycle(3), Make(4, {}), 0).winner, kDup);
  // Sizes 3 and 4 of edgeless graphs differ at rank 4 only.
  EXPECT_EQ(EfGame(Make(3, {}), Make(4, {}), 3).winner, kDup);
  EXPECT_EQ(EfGame(Make(3, {}), Make(4, {}), 4).winner, kSpo);
  // A start pair that is not a partial isomorphism loses at once.
  const VertexPair bad[] = {{0, 0}, {1, 1}};
  EXPECT_EQ(EfGame(Edge(), Make(2, {}), 0, bad).winner, kSpo);
}

TEST(EfGame, Errors) {
  const VertexPair clash[] = {{0, 0}, {0, 1}};
  EXPECT_THROW(EfGame(Edge(), Edge(), 1, clash), PreconditionError);
  const VertexPair range[] = {{0, 5}};
  EXPECT_THROW(EfGame(Edge(), Edge(), 1, range), Error);
  GameOptions small;
  small.capacity.game_vertices = 3;
  EXPECT_THROW(EfGame(oracle::Path(4), oracle::Path(4), 1, {}, small), CapacityError);
}

TEST(EfGame, TranscriptIsALegalLine) {
  GameOptions opt;
  opt.transcript = true;
  const GameResult r = EfGame(oracle::Path(4), oracle::Star(3), 3, {}, opt);
  EXPECT_EQ(r.winner, kSpo);
  ASSERT_FALSE(r.transcript.empty());
  EXPECT_LE(r.transcript.size(), 3u);
  for (std::size_t i = 0; i < r.transcript.size(); ++i) {
    EXPECT_EQ(r.transcript[i].round, static_cast<int>(i) + 1);
    EXPECT_TRUE(r.transcript[i].side == 1 || r.transcript[i].side == 2);
  }
}

TEST(EfGame, AgreesWithPlainMinimax) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 300; ++trial) {
    const bool forest = trial % 3 != 0;
    const int n1 = 1 + static_cast<int>(rng() % 5), n2 = 1 + static_cast<int>(rng() % 5);
    const FiniteGraph g1 = forest ? oracle::RandomForest(rng, n1) : oracle::RandomGraph(rng, n1, 0.5);
    const FiniteGraph g2 = forest ? oracle::RandomForest(rng, n2) : oracle::RandomGraph(rng, n2, 0.5);
    const int k = 1 + trial % 3;
    const bool naive = oracle::NaiveDuplicatorWins(g1, g2, k, {});
    for (int variant = 0; variant < 4; ++variant) {
      GameOptions opt;
      opt.memoize = variant & 1;
      opt.orbit_pruning = variant & 2;
      opt.isomorphism_shortcut = variant == 3;
      ASSERT_EQ(EfGame(g1, g2, k, {}, opt).winner == kDup, naive)
          << GraphToJson(g1) << " vs " << GraphToJson(g2) << " k=" << k
          << " variant " << variant;
    }
  }
}

TEST(EfGame, MatchesHintikkaSentences) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int k = 1 + trial % 2;
    const FiniteGraph g1 = oracle::RandomForest(rng, 2 + static_cast<int>(rng() % 4));
    const FiniteGraph g2 = oracle::RandomForest(rng, 2 + static_cast<int>(rng() % 4));
    const Formula h = oracle::Hintikka(g1, k);
    ASSERT_EQ(EfGame(g1, g2, k).winner == kDup, oracle::NaiveEval(g2, h));
  }
}

TEST(DistanceEfGame, Examples) {
  // Same tree, automorphic start.
  const FiniteGraph p5 = oracle::Path(5);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(DistanceEfGame(p5, 0, p5, 4, k).winner, kDup);
    EXPECT_EQ(DistanceEfGame(p5, 1, p5, 3, k).winner, kDup);
  }
  // Endpoint against centre of a 3-path, radius-1 neighbourhoods. With the
  // start pair counted as a round two rounds are not enough; three are.
  const FiniteGraph p3 = oracle::Path(3);
  const RootedGraph end = Hood(p3, 0, 1), mid = Hood(p3, 1, 1);
  EXPECT_EQ(DistanceEfGame(end.graph, end.root, mid.graph, mid.root, 2).winner, kDup);
  EXPECT_EQ(DistanceEfGame(end.graph, end.root, mid.graph, mid.root, 3).winner, kSpo);
  GameOptions free_start;
  free_start.start_consumes_round = false;
  EXPECT_EQ(
      DistanceEfGame(end.graph, end.root, mid.graph, mid.root, 2, free_start).winner,
      kSpo);
  EXPECT_THROW(DistanceEfGame(p3, 0, p3, 0, 0), PreconditionError);
}

TEST(DistanceEfGame, OneRoundAfterTheStartSeesIsolation) {
  // With one round after the start, radius-1 neighbourhoods differ exactly
  // when one root is isolated and the other is not.
  const FiniteGraph g = Make(6, {{0, 1}, {2, 3}, {2, 4}});
  GameOptions free_start;
  free_start.start_consumes_round = false;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = 0; b < 6; ++b) {
      const RootedGraph ha = Hood(g, a, 1), hb = Hood(g, b, 1);
      const bool same_status = (g.degree(a) == 0) == (g.degree(b) == 0);
      EXPECT_EQ(DistanceEfGame(ha.graph, ha.root, hb.graph, hb.root, 1, free_start).winner ==
                    kDup,
                same_status);
      // Counting the start as the only round, Duplicator always wins.
      EXPECT_EQ(DistanceEfGame(ha.graph, ha.root, hb.graph, hb.root, 1).winner, kDup);
    }
  }
}

TEST(DistanceEfGame, AgreesWithPlainMinimax) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteGraph g1 = oracle::RandomForest(rng, 1 + static_cast<int>(rng() % 6));
    const FiniteGraph g2 = oracle::RandomForest(rng, 1 + static_cast<int>(rng() % 6));
    const Vertex a = static_cast<Vertex>(rng() % g1.order());
    const Vertex b = static_cast<Vertex>(rng() % g2.order());
    const int k = 1 + trial % 3;
    GameOptions opt;
    opt.start_consumes_round = trial % 2 == 0;
    const int further = opt.start_consumes_round ? k - 1 : k;
    const bool naive = oracle::NaiveDuplicatorWins(g1, g2, further, {{a, b}}, true);
    ASSERT_EQ(DistanceEfGame(g1, a, g2, b, k, opt).winner == kDup, naive)
        << GraphToJson(g1) << " vs " << GraphToJson(g2);
    opt.memoize = false;
    opt.orbit_pruning = false;
    opt.isomorphism_shortcut = false;
    ASSERT_EQ(DistanceEfGame(g1, a, g2, b, k, opt).winner == kDup, naive);
  }
}

TEST(KSimilar, Examples) {
  const FiniteGraph long1 = oracle::Path(12), long2 = oracle::Path(9);
  for (int r = 1; r <= 3; ++r) {
    EXPECT_TRUE(KSimilar(long1, 0, long2, 8, 2, r));
  }
  // Degree one against degree three at radius one.
  const FiniteGraph star = oracle::Star(3);
  GameOptions free_start;
  free_start.start_consumes_round = false;
  EXPECT_FALSE(KSimilar(star, 1, star, 0, 2, 1, free_start));
  EXPECT_TRUE(KSimilar(star, 1, star, 0, 2, 1));
  EXPECT_FALSE(KSimilar(star, 1, star, 0, 3, 1));
  EXPECT_TRUE(KSimilar(star, 1, star, 2, 3, 1));
  EXPECT_THROW(KSimilar(star, 0, star, 0, 0, 1), PreconditionError);
  EXPECT_EQ(SimilarityRadius(1), 1);
  EXPECT_EQ(SimilarityRadius(2), 4);
  EXPECT_EQ(SimilarityRadius(3), 13);
}

TEST(KSimilar, EqualValuesGiveSimilarNeighbourhoods) {
  std::mt19937_64 rng(107);
  int pairs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 1 + trial % 3;
    const int s = 1 + (trial / 3) % 3;
    const FiniteGraph t1 = oracle::RandomTree(rng, 8 + static_cast<int>(rng() % 20), 4);
    const FiniteGraph t2 = oracle::RandomTree(rng, 8 + static_cast<int>(rng() % 20), 4);
    const auto v1 = RsValuesOfForest(t1, r, s - 1);
    const auto v2 = RsValuesOfForest(t2, r, s - 1);
    for (std::size_t a = 0; a < v1.size(); a += 2) {
      for (std::size_t b = 0; b < v2.size(); b += 3) {
        if (!(v1[a] == v2[b])) continue;
        ++pairs;
        ASSERT_TRUE(KSimilar(t1, a, t2, b, s, r))
            << GraphToJson(t1) << " " << a << " vs " << GraphToJson(t2) << " " << b;
      }
    }
  }
  EXPECT_GT(pairs, 50);
}

TEST(DuplicatorSufficient, Examples) {
  std::mt19937_64 rng(109);
  for (int k = 1; k <= 2; ++k) {
    const FiniteGraph t = oracle::RandomTree(rng, 6);
    std::vector<FiniteGraph> copies(k, t);
    const FiniteGraph g = DisjointUnion(copies);
    EXPECT_TRUE(DuplicatorSufficient(g, g, k));
  }
  const FiniteGraph p4 = oracle::Path(4);
  EXPECT_FALSE(DuplicatorSufficient(p4, p4, 2));
  EXPECT_EQ(EfGame(p4, p4, 2).winner, kDup);
  EXPECT_THROW(DuplicatorSufficient(p4, p4, 0), PreconditionError);
}

TEST(DuplicatorSufficient, CertificatesAreSound) {
  std::mt19937_64 rng(113);
  int certified = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int k = 1 + trial % 2;
    std::vector<FiniteGraph> parts1, parts2;
    const int kinds = 1 + static_cast<int>(rng() % 2);
    std::vector<FiniteGraph> pool;
    for (int i = 0; i < kinds; ++i) pool.push_back(oracle::RandomTree(rng, 1 + static_cast<int>(rng() % 4)));
    for (int i = 0; i < k + static_cast<int>(rng() % 2); ++i) {
      parts1.push_back(pool[rng() % pool.size()]);
      parts2.push_back(pool[rng() % pool.size()]);
    }
    const FiniteGraph g1 = DisjointUnion(parts1), g2 = DisjointUnion(parts2);
    if (DuplicatorSufficient(g1, g2, k)) {
      ++certified;
      ASSERT_EQ(EfGame(g1, g2, k).winner, kDup) << GraphToJson(g1) << " vs " << GraphToJson(g2);
      ASSERT_TRUE(oracle::NaiveDuplicatorWins(g1, g2, k, {}));
    }
  }
  EXPECT_GT(certified, 10);
}

}  // namespace
}  // namespace gfl
