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

#ifndef GFL_CAPACITY_H_
#define GFL_CAPACITY_H_

#include <cstddef>
#include <string_view>

namespace gfl {

// Size guards for the exponential searches. Exceeding one raises
// CapacityError instead of running unbounded.
struct Capacity {
  // Subgraph searches (subdivided cliques).
  std::size_t subgraph_vertices = 32;
  // Vertices per side for EF and Distance-EF games.
  std::size_t game_vertices = 60;
  // Largest vertex count accepted by class enumeration.
  std::size_t enumerate_size = 12;
  // Free vertices for subset-enumeration fallbacks (2^n supersets).
  std::size_t brute_force_vertices = 22;
  // Highest quantifier rank accepted by decide.
  int decide_rank = 2;

  // Reads overrides from the GFL_CAPACITY environment variable; see Parse.
  static Capacity FromEnvironment();

  // Applies a spec of the form "game=200,subgraph=40" on top of the
  // defaults. A bare integer sets both vertex guards (game and subgraph).
  // Keys: subgraph, game, enumerate, brute, rank. Throws PreconditionError
  // on malformed input.
  static Capacity Parse(std::string_view spec);
};

}  // namespace gfl

#endif  // GFL_CAPACITY_H_
