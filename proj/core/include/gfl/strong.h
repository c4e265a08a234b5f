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

// Closedness, closures, dimension and extension classification for finite
// graphs. The fast paths rely on the ambient graph being a forest; the
// generic definitions are enumerated by brute force only where a test
// needs them (see reference.h).

#ifndef GFL_STRONG_H_
#define GFL_STRONG_H_

#include <optional>
#include <string_view>
#include <vector>

#include "gfl/capacity.h"
#include "gfl/graph.h"

namespace gfl {

// A closed in B: every C with A < C <= B has larger predimension than A.
// On forests this is "no edge between A and B \ A". Other graphs fall back
// to subset enumeration within cap.brute_force_vertices.
bool IsClosed(const FiniteGraph& g, const VertexSet& a,
              const Capacity& cap = {});
bool IsClosed(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
              const Capacity& cap = {});

// A weakly closed in B: no C between A and B has smaller predimension. On
// forests: every component of G[B] meets A in a connected set or not at all.
bool IsWeaklyClosed(const FiniteGraph& g, const VertexSet& a,
                    const Capacity& cap = {});
bool IsWeaklyClosed(const FiniteGraph& g, const VertexSet& a,
                    const VertexSet& b, const Capacity& cap = {});

// cl*(S) together with a tower of one-vertex minimal pairs from S up to it.
// Each chain entry is adjacent to the stage before it; ties go to the
// smallest id.
struct ClosureResult {
  VertexSet closure;
  VertexSet seed;
  std::vector<Vertex> chain;

  // The set reached before chain[i] is added; StageBefore(chain.size()) is
  // the closure.
  VertexSet StageBefore(std::size_t i) const;
};

// Requires a forest (NotAForestError otherwise).
ClosureResult ClosureStar(const FiniteGraph& g, const VertexSet& s);

// Least weakly closed superset. Requires a forest.
VertexSet WeakClosure(const FiniteGraph& g, const VertexSet& s);

// d(S) = min delta(C) over S <= C <= G. Forests: components meeting S.
long Dimension(const FiniteGraph& g, const VertexSet& s,
               const Capacity& cap = {});
// d(S / T) = d(S u T) - d(T).
long RelativeDimension(const FiniteGraph& g, const VertexSet& s,
                       const VertexSet& t, const Capacity& cap = {});

enum class ExtensionKind {
  kClosed,
  kWeaklyClosed,
  kMinimalPair,
  kZeroMinimalPair,
  kWeakMinimalPair,
  kIntrinsic,
  kZeroIntrinsic,
  kWeakIntrinsic,
  kNone,
};

std::string_view ToString(ExtensionKind kind);
std::optional<ExtensionKind> ParseExtensionKind(std::string_view text);

struct ExtensionReport {
  ExtensionKind kind = ExtensionKind::kNone;
  long relative_predimension = 0;  // delta(B) - delta(A)
  std::optional<Vertex> singleton;  // minimal pairs only
  // Whenever B is intrinsic over A (whatever the tag): the vertices of
  // B \ A in an order where each one is adjacent to A plus its
  // predecessors. Empty otherwise.
  std::vector<Vertex> chain;
};

// Classifies A <= B where B is the whole graph `b`, which must be a forest.
// Precedence when several tags apply: closed, (zero) minimal pair, weak
// minimal pair, weak intrinsic, (zero) intrinsic, weakly closed, none.
ExtensionReport ClassifyExtension(const FiniteGraph& b, const VertexSet& a);

// The unique path from `b` to A that meets A only in its last vertex.
// Throws PreconditionError when A is not weakly closed (if checked), when
// no path exists, or when the path is not unique.
std::vector<Vertex> UniquePathTo(const FiniteGraph& g, const VertexSet& a,
                                 Vertex b, bool check_precondition = true);

}  // namespace gfl

#endif  // GFL_STRONG_H_
