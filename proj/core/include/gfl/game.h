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

// Ehrenfeucht-Fraisse and distance Ehrenfeucht-Fraisse games solved by
// memoized minimax, k-similarity of neighbourhoods and a sufficient
// condition for Duplicator wins built from them.

#ifndef GFL_GAME_H_
#define GFL_GAME_H_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "gfl/capacity.h"
#include "gfl/graph.h"

namespace gfl {

enum class Winner { kSpoiler, kDuplicator };
std::string_view ToString(Winner w);

enum class GameMode { kPlain, kDistance };

struct GameOptions {
  bool memoize = true;
  // On forests, only one move per orbit of the automorphisms fixing the
  // pebbled vertices is tried, on both sides.
  bool orbit_pruning = true;
  // On forests, a position whose two sides are isomorphic is a Duplicator
  // win without search.
  bool isomorphism_shortcut = true;
  // Distance games: the start pair uses up the first round.
  bool start_consumes_round = true;
  // Record one line of optimal play.
  bool transcript = false;
  Capacity capacity{};
};

struct GameMove {
  int round = 0;          // 1-based
  int side = 1;           // the graph the Spoiler moved in (1 or 2)
  Vertex spoiler = -1;    // in graph `side`
  Vertex duplicator = -1; // in the other graph, -1 when no legal reply
};

struct GameResult {
  Winner winner = Winner::kDuplicator;
  std::vector<GameMove> transcript;
  std::size_t positions = 0;  // positions searched
};

using VertexPair = std::pair<Vertex, Vertex>;

// k-round EF game from the given pebbled pairs. Throws PreconditionError
// when the start pairs do not define a partial injective map and
// CapacityError when a side exceeds capacity.game_vertices.
GameResult EfGame(const FiniteGraph& g1, const FiniteGraph& g2, int k,
                  std::span<const VertexPair> start = {},
                  const GameOptions& options = {});

// Distance EF game started by pebbling a in g1 and b in g2; replies must
// also preserve all pairwise distances, infinity included. k >= 1.
GameResult DistanceEfGame(const FiniteGraph& g1, Vertex a,
                          const FiniteGraph& g2, Vertex b, int k,
                          const GameOptions& options = {});

// The r-neighbourhoods of a and b are k-similar.
bool KSimilar(const FiniteGraph& g1, Vertex a, const FiniteGraph& g2, Vertex b,
              int k, int r, const GameOptions& options = {});

// (3^k - 1) / 2.
int SimilarityRadius(int k);

// Both sufficient conditions for a k-round Duplicator win: every vertex on
// one side has a k-similar partner on the other side at distance above
// 2r + 1 from any k - 1 given vertices, r = SimilarityRadius(k). True is a
// certificate; false is inconclusive.
bool DuplicatorSufficient(const FiniteGraph& g1, const FiniteGraph& g2, int k,
                          const GameOptions& options = {});

}  // namespace gfl

#endif  // GFL_GAME_H_
