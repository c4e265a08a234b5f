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

#include "gfl/game.h"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

#include "gfl/errors.h"
#include "gfl/forest.h"
#include "orbits.h"

namespace gfl {

std::string_view ToString(Winner w) {
  return w == Winner::kSpoiler ? "spoiler" : "duplicator";
}

int SimilarityRadius(int k) {
  int p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return (p - 1) / 2;
}

namespace {

void CheckCapacity(const FiniteGraph& g, const Capacity& cap) {
  if (g.order() > cap.game_vertices) {
    throw CapacityError("game", g.order(), cap.game_vertices);
  }
}

// One board of the game with the structures the solver consults.
class Board {
 public:
  Board(const FiniteGraph& g, GameMode mode, const GameOptions& options)
      : g_(g), forest_(IsForest(g)) {
    if (forest_ && (options.orbit_pruning || options.memoize ||
                    options.isomorphism_shortcut)) {
      orbits_.emplace(g);
    }
    prune_ = options.orbit_pruning && orbits_.has_value();
    if (mode == GameMode::kDistance) {
      for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
        dist_.push_back(DistancesFrom(g, v));
      }
    }
  }

  const FiniteGraph& graph() const { return g_; }
  bool has_codes() const { return orbits_.has_value(); }
  const std::string& graph_code() const { return orbits_->graph_code(); }

  Distance Dist(Vertex u, Vertex v) const { return dist_[u][v]; }

  // Unpebbled vertices worth trying, in index order.
  std::vector<Vertex> Candidates(const std::vector<Vertex>& marks) const {
    std::vector<Vertex> out;
    if (prune_) {
      out = orbits_->Representatives(marks);
    } else {
      out.resize(g_.order());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i);
    }
    std::erase_if(out, [&](Vertex v) {
      return std::find(marks.begin(), marks.end(), v) != marks.end();
    });
    return out;
  }

  // Rooted type of v's component, or "" when unknown.
  const std::string& VertexCode(Vertex v) const {
    static const std::string kNone;
    return orbits_ ? orbits_->VertexCode(v) : kNone;
  }

  // v lies in a component holding no mark. False when unknown.
  bool Fresh(Vertex v, const std::vector<Vertex>& marks) const {
    if (!orbits_) return false;
    const auto& label = orbits_->components().label;
    return std::none_of(marks.begin(), marks.end(),
                        [&](Vertex m) { return label[m] == label[v]; });
  }

  std::string Key(const std::vector<Vertex>& marks) const {
    if (orbits_) return orbits_->PositionKey(marks);
    std::string key;
    for (Vertex v : marks) key += std::to_string(v) + ',';
    return key;
  }

 private:
  const FiniteGraph& g_;
  bool forest_;
  bool prune_ = false;
  std::optional<internal::ForestOrbits> orbits_;
  std::vector<std::vector<Distance>> dist_;
};

class Solver {
 public:
  Solver(const Board& b1, const Board& b2, GameMode mode,
         const GameOptions& options)
      : boards_{&b1, &b2}, mode_(mode), options_(options) {}

  std::size_t positions() const { return positions_; }

  // Whether x on board `side` and y on the other board extend the
  // pebbled pairs to a partial isomorphism. Both must be unpebbled.
  bool Compatible(int side, Vertex x, Vertex y) const {
    const Board& bx = *boards_[side];
    const Board& by = *boards_[1 - side];
    const auto& mx = marks_[side];
    const auto& my = marks_[1 - side];
    for (std::size_t i = 0; i < mx.size(); ++i) {
      if (bx.graph().adjacent(x, mx[i]) != by.graph().adjacent(y, my[i])) {
        return false;
      }
      if (mode_ == GameMode::kDistance &&
          bx.Dist(x, mx[i]) != by.Dist(y, my[i])) {
        return false;
      }
    }
    return true;
  }

  // Pairs (x, y) pebbled so far, used to check a start position.
  bool PebblesConsistent() const {
    const auto& m1 = marks_[0];
    const auto& m2 = marks_[1];
    for (std::size_t j = 0; j < m1.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (boards_[0]->graph().adjacent(m1[i], m1[j]) !=
            boards_[1]->graph().adjacent(m2[i], m2[j])) {
          return false;
        }
        if (mode_ == GameMode::kDistance &&
            boards_[0]->Dist(m1[i], m1[j]) != boards_[1]->Dist(m2[i], m2[j])) {
          return false;
        }
      }
    }
    return true;
  }

  void Push(int side, Vertex x, Vertex y) {
    marks_[side].push_back(x);
    marks_[1 - side].push_back(y);
  }

  void Pop() {
    marks_[0].pop_back();
    marks_[1].pop_back();
  }

  bool DuplicatorWins(int rounds) {
    ++positions_;
    if (rounds == 0) return true;
    if (rounds == 1) return LastRound();
    std::string key;
    if (boards_[0]->has_codes() && boards_[1]->has_codes()) {
      const std::string k1 = boards_[0]->Key(marks_[0]);
      const std::string k2 = boards_[1]->Key(marks_[1]);
      if (options_.isomorphism_shortcut && k1 == k2 &&
          boards_[0]->graph_code() == boards_[1]->graph_code()) {
        return true;
      }
      if (options_.memoize) key = k1 + '|' + k2 + '|' + std::to_string(rounds);
    } else if (options_.memoize) {
      key = boards_[0]->Key(marks_[0]) + '|' + boards_[1]->Key(marks_[1]) +
            '|' + std::to_string(rounds);
    }
    if (!key.empty()) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    const bool result = Search(rounds);
    if (!key.empty()) memo_.emplace(std::move(key), result);
    return result;
  }

  // Spoiler's refuting move (side, x) from the current position, if any.
  std::optional<std::pair<int, Vertex>> Refutation(int rounds) {
    for (int side = 0; side < 2; ++side) {
      const Replies replies = IndexReplies(side);
      for (Vertex x : boards_[side]->Candidates(marks_[side])) {
        if (FindReply(side, x, replies, rounds) < 0) {
          return std::make_pair(side, x);
        }
      }
    }
    return std::nullopt;
  }

  // Duplicator's winning reply to x on `side`, or -1.
  Vertex WinningReply(int side, Vertex x, int rounds) {
    return FindReply(side, x, IndexReplies(side), rounds);
  }

  Vertex AnyReply(int side, Vertex x) const {
    for (Vertex y : boards_[1 - side]->Candidates(marks_[1 - side])) {
      if (Compatible(side, x, y)) return y;
    }
    return -1;
  }

  std::vector<Vertex> FirstMoves(int side) const {
    return boards_[side]->Candidates(marks_[side]);
  }

 private:
  // Duplicator's candidate replies to a move on `side`. In the plain game
  // the ones adjacent to no pebble are kept apart and grouped by type.
  struct Replies {
    std::vector<Vertex> all;
    std::vector<Vertex> far;
    std::unordered_map<std::string_view, std::vector<Vertex>> far_by_code;
  };

  Replies IndexReplies(int side) const {
    const Board& by = *boards_[1 - side];
    Replies r;
    r.all = by.Candidates(marks_[1 - side]);
    if (mode_ != GameMode::kPlain) return r;
    std::vector<Vertex> near;
    for (Vertex m : marks_[1 - side]) {
      for (Vertex y : by.graph().neighbors(m)) near.push_back(y);
    }
    std::sort(near.begin(), near.end());
    for (Vertex y : r.all) {
      if (std::binary_search(near.begin(), near.end(), y)) continue;
      r.far.push_back(y);
      const std::string& code = by.VertexCode(y);
      if (!code.empty()) r.far_by_code[code].push_back(y);
    }
    // Replies in fresh components first.
    for (auto& [code, list] : r.far_by_code) {
      std::stable_partition(list.begin(), list.end(), [&](Vertex y) {
        return by.Fresh(y, marks_[1 - side]);
      });
    }
    return r;
  }

  bool Try(int side, Vertex x, Vertex y, int rounds) {
    Push(side, x, y);
    const bool win = DuplicatorWins(rounds - 1);
    Pop();
    return win;
  }

  // Replies that look like x are tried first: the same position key when
  // more rounds follow, the same vertex type otherwise. Only the order
  // changes, so the answer does not.
  Vertex FindReply(int side, Vertex x, const Replies& replies, int rounds) {
    const Board& bx = *boards_[side];
    const Board& by = *boards_[1 - side];
    const bool codes = bx.has_codes() && by.has_codes();
    bool far = false;
    std::vector<Vertex> pool;
    if (mode_ == GameMode::kPlain) {
      far = std::none_of(marks_[side].begin(), marks_[side].end(),
                         [&](Vertex m) { return bx.graph().adjacent(x, m); });
      if (!far) pool = AdjacentReplies(side, x, replies.all);
    } else {
      for (Vertex y : replies.all) {
        if (Compatible(side, x, y)) pool.push_back(y);
      }
    }
    const std::vector<Vertex>& cands = far ? replies.far : pool;
    const std::string* cx = codes ? &bx.VertexCode(x) : nullptr;
    if (cx != nullptr && cx->empty()) cx = nullptr;
    // With more rounds to come a poor first guess is costly, so compare
    // whole positions unless x sits in a fresh component, where its type
    // already says the same.
    if (codes && rounds >= 3 && !(far && cx != nullptr && bx.Fresh(x, marks_[side]))) {
      marks_[side].push_back(x);
      const std::string kx = bx.Key(marks_[side]);
      marks_[side].pop_back();
      std::vector<Vertex> later;
      for (Vertex y : cands) {
        marks_[1 - side].push_back(y);
        const bool same = by.Key(marks_[1 - side]) == kx;
        marks_[1 - side].pop_back();
        if (!same) {
          later.push_back(y);
        } else if (Try(side, x, y, rounds)) {
          return y;
        }
      }
      for (Vertex y : later) {
        if (Try(side, x, y, rounds)) return y;
      }
      return -1;
    }
    if (cx != nullptr) {
      if (far) {
        auto it = replies.far_by_code.find(*cx);
        if (it != replies.far_by_code.end()) {
          for (Vertex y : it->second) {
            if (Try(side, x, y, rounds)) return y;
          }
        }
      } else {
        for (Vertex y : cands) {
          if (by.VertexCode(y) == *cx && Try(side, x, y, rounds)) return y;
        }
      }
    }
    for (Vertex y : cands) {
      if (cx != nullptr && by.VertexCode(y) == *cx) continue;
      if (Try(side, x, y, rounds)) return y;
    }
    return -1;
  }

  // Replies compatible with x, given x is adjacent to some pebble.
  std::vector<Vertex> AdjacentReplies(int side, Vertex x,
                                      const std::vector<Vertex>& all) const {
    const FiniteGraph& gx = boards_[side]->graph();
    const auto& mx = marks_[side];
    std::size_t first = 0;
    while (!gx.adjacent(x, mx[first])) ++first;
    std::vector<Vertex> out;
    for (Vertex y : boards_[1 - side]->graph().neighbors(marks_[1 - side][first])) {
      if (std::binary_search(all.begin(), all.end(), y) && Compatible(side, x, y)) {
        out.push_back(y);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool Search(int rounds) {
    for (int side = 0; side < 2; ++side) {
      const Replies replies = IndexReplies(side);
      for (Vertex x : boards_[side]->Candidates(marks_[side])) {
        if (FindReply(side, x, replies, rounds) < 0) return false;
      }
    }
    return true;
  }

  // With one round left Duplicator wins iff both boards realize the same
  // set of atomic types over the pebbles among unpebbled vertices.
  bool LastRound() const {
    if (mode_ == GameMode::kPlain && marks_[0].size() <= 64) {
      return EdgeMasks(0) == EdgeMasks(1);
    }
    return AtomicTypes(0) == AtomicTypes(1);
  }

  // Plain-game atomic types as bitmasks over the pebbles, sorted.
  std::vector<std::uint64_t> EdgeMasks(int side) const {
    const FiniteGraph& g = boards_[side]->graph();
    const auto& marks = marks_[side];
    std::vector<std::pair<Vertex, std::uint64_t>> touched;
    for (std::size_t i = 0; i < marks.size(); ++i) {
      for (Vertex w : g.neighbors(marks[i])) {
        if (std::find(marks.begin(), marks.end(), w) != marks.end()) continue;
        auto it = std::find_if(touched.begin(), touched.end(),
                               [&](const auto& e) { return e.first == w; });
        if (it == touched.end()) {
          touched.emplace_back(w, 0);
          it = touched.end() - 1;
        }
        it->second |= std::uint64_t{1} << i;
      }
    }
    std::vector<std::uint64_t> out;
    out.reserve(touched.size() + 1);
    for (const auto& [w, mask] : touched) out.push_back(mask);
    std::vector<Vertex> distinct(marks);
    std::sort(distinct.begin(), distinct.end());
    const std::size_t pebbled =
        std::unique(distinct.begin(), distinct.end()) - distinct.begin();
    if (g.order() - pebbled > touched.size()) out.push_back(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::set<std::vector<int>> AtomicTypes(int side) const {
    const Board& b = *boards_[side];
    const auto& marks = marks_[side];
    const std::size_t p = marks.size();
    std::set<std::vector<int>> types;
    auto pebbled = [&](Vertex v) {
      return std::find(marks.begin(), marks.end(), v) != marks.end();
    };
    if (mode_ == GameMode::kDistance) {
      for (Vertex v = 0; static_cast<std::size_t>(v) < b.graph().order(); ++v) {
        if (pebbled(v)) continue;
        std::vector<int> t(p);
        for (std::size_t i = 0; i < p; ++i) t[i] = b.Dist(v, marks[i]);
        types.insert(std::move(t));
      }
      return types;
    }
    std::map<Vertex, std::vector<int>> touched;
    for (std::size_t i = 0; i < p; ++i) {
      for (Vertex w : b.graph().neighbors(marks[i])) {
        if (pebbled(w)) continue;
        auto& t = touched.try_emplace(w, std::vector<int>(p, 0)).first->second;
        t[i] = 1;
      }
    }
    std::set<Vertex> distinct(marks.begin(), marks.end());
    const std::size_t free = b.graph().order() - distinct.size();
    if (free > touched.size()) types.insert(std::vector<int>(p, 0));
    for (auto& [v, t] : touched) types.insert(std::move(t));
    return types;
  }

  const Board* boards_[2];
  GameMode mode_;
  const GameOptions& options_;
  std::vector<Vertex> marks_[2];
  std::unordered_map<std::string, bool> memo_;
  std::size_t positions_ = 0;
};

// One line of optimal play from the current position.
void Replay(Solver& solver, int rounds, int round_number,
            std::vector<GameMove>& out) {
  for (int left = rounds; left > 0; --left, ++round_number) {
    GameMove move;
    move.round = round_number;
    if (solver.DuplicatorWins(left)) {
      const std::vector<Vertex> first = solver.FirstMoves(0);
      int side = 0;
      std::vector<Vertex> moves = first;
      if (moves.empty()) {
        side = 1;
        moves = solver.FirstMoves(1);
      }
      if (moves.empty()) return;
      move.side = side + 1;
      move.spoiler = moves[0];
      move.duplicator = solver.WinningReply(side, moves[0], left);
    } else {
      const auto refutation = solver.Refutation(left);
      if (!refutation) return;
      move.side = refutation->first + 1;
      move.spoiler = refutation->second;
      move.duplicator = solver.AnyReply(refutation->first, refutation->second);
    }
    out.push_back(move);
    if (move.duplicator < 0) return;
    solver.Push(move.side - 1, move.spoiler, move.duplicator);
  }
}

GameResult Play(const FiniteGraph& g1, const FiniteGraph& g2, int rounds,
                std::span<const VertexPair> start, GameMode mode,
                const GameOptions& options, int first_round) {
  CheckCapacity(g1, options.capacity);
  CheckCapacity(g2, options.capacity);
  std::vector<VertexPair> pairs;
  for (const auto& [x, y] : start) {
    g1.CheckVertex(x);
    g2.CheckVertex(y);
    bool duplicate = false;
    for (const auto& [px, py] : pairs) {
      if ((px == x) != (py == y)) {
        throw PreconditionError(
            "start pairs do not define a partial injective map");
      }
      duplicate = duplicate || px == x;
    }
    if (!duplicate) pairs.emplace_back(x, y);
  }
  const Board b1(g1, mode, options);
  const Board b2(g2, mode, options);
  Solver solver(b1, b2, mode, options);
  for (const auto& [x, y] : pairs) solver.Push(0, x, y);
  GameResult result;
  if (!solver.PebblesConsistent()) {
    result.winner = Winner::kSpoiler;
    return result;
  }
  result.winner = solver.DuplicatorWins(rounds) ? Winner::kDuplicator
                                                : Winner::kSpoiler;
  if (options.transcript) Replay(solver, rounds, first_round, result.transcript);
  result.positions = solver.positions();
  return result;
}

}  // namespace

GameResult EfGame(const FiniteGraph& g1, const FiniteGraph& g2, int k,
                  std::span<const VertexPair> start,
                  const GameOptions& options) {
  if (k < 0) throw PreconditionError("round count must be non-negative");
  return Play(g1, g2, k, start, GameMode::kPlain, options, 1);
}

GameResult DistanceEfGame(const FiniteGraph& g1, Vertex a,
                          const FiniteGraph& g2, Vertex b, int k,
                          const GameOptions& options) {
  if (k < 1) throw PreconditionError("distance game needs k >= 1");
  const VertexPair start[] = {{a, b}};
  const int rounds = options.start_consumes_round ? k - 1 : k;
  return Play(g1, g2, rounds, start, GameMode::kDistance, options,
              options.start_consumes_round ? 2 : 1);
}

bool KSimilar(const FiniteGraph& g1, Vertex a, const FiniteGraph& g2, Vertex b,
              int k, int r, const GameOptions& options) {
  if (k < 1) throw PreconditionError("k-similarity needs k >= 1");
  if (r < 0) throw PreconditionError("radius must be non-negative");
  const RootedGraph n1 = Neighborhood(g1, a, r);
  const RootedGraph n2 = Neighborhood(g2, b, r);
  return DistanceEfGame(n1.graph, n1.root, n2.graph, n2.root, k, options)
             .winner == Winner::kDuplicator;
}

namespace {

// Every choice of k - 1 vertices of g leaves some vertex of `targets` at
// distance above `gap` from all of them.
bool FarMemberAlwaysExists(const FiniteGraph& g,
                           const std::vector<Vertex>& targets, int k, int gap) {
  if (targets.empty()) return false;
  if (k <= 1) return true;
  const Components comps = ConnectedComponents(g);
  std::set<int> spanned;
  for (Vertex t : targets) spanned.insert(comps.label[t]);
  if (spanned.size() >= static_cast<std::size_t>(k)) return true;

  // Only vertices near a target can block one.
  std::map<Vertex, std::vector<Distance>> dist;
  std::vector<Vertex> blockers;
  for (int c : spanned) {
    for (Vertex v : comps.members[c]) {
      std::vector<Distance> d = DistancesFrom(g, v);
      bool near = false;
      for (Vertex t : targets) near = near || d[t] <= gap;
      if (near) {
        blockers.push_back(v);
        dist.emplace(v, std::move(d));
      }
    }
  }
  const std::size_t pick =
      std::min(blockers.size(), static_cast<std::size_t>(k - 1));
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    bool covered = true;
    for (Vertex t : targets) {
      bool blocked = false;
      for (std::size_t i : idx) blocked = blocked || dist[blockers[i]][t] <= gap;
      if (!blocked) {
        covered = false;
        break;
      }
    }
    if (covered) return false;
    // Next combination of `pick` blockers.
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == blockers.size() - pick + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool DuplicatorSufficient(const FiniteGraph& g1, const FiniteGraph& g2, int k,
                          const GameOptions& options) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  CheckCapacity(g1, options.capacity);
  CheckCapacity(g2, options.capacity);
  const int r = SimilarityRadius(k);
  const FiniteGraph* graphs[2] = {&g1, &g2};

  // Vertices with isomorphic rooted neighbourhoods are k-similar to the
  // same vertices, so similarity is decided once per neighbourhood code.
  struct Rep {
    int side;
    Vertex v;
  };
  std::vector<Rep> code_reps;
  std::map<std::string, int> code_index;
  std::vector<int> code_of[2];
  for (int side = 0; side < 2; ++side) {
    const FiniteGraph& g = *graphs[side];
    const bool forest = IsForest(g);
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
      std::string code;
      if (forest) {
        const RootedGraph n = Neighborhood(g, v, r);
        const Vertex marks[] = {n.root};
        code = CanonicalCode(n.graph, marks);
      } else {
        code = std::to_string(side) + ":" + std::to_string(v);
      }
      auto [it, inserted] =
          code_index.emplace(code, static_cast<int>(code_reps.size()));
      if (inserted) code_reps.push_back({side, v});
      code_of[side].push_back(it->second);
    }
  }
  // k-similarity is an equivalence relation; merge codes into classes.
  std::vector<int> class_of_code(code_reps.size());
  std::vector<int> class_reps;
  for (std::size_t c = 0; c < code_reps.size(); ++c) {
    int found = -1;
    for (std::size_t j = 0; j < class_reps.size() && found < 0; ++j) {
      const Rep& a = code_reps[c];
      const Rep& b = code_reps[class_reps[j]];
      if (KSimilar(*graphs[a.side], a.v, *graphs[b.side], b.v, k, r, options)) {
        found = static_cast<int>(j);
      }
    }
    if (found < 0) {
      found = static_cast<int>(class_reps.size());
      class_reps.push_back(static_cast<int>(c));
    }
    class_of_code[c] = found;
  }

  // Condition for partners of every vertex of `from` inside `to`.
  auto condition = [&](int from, int to) {
    std::map<int, std::vector<Vertex>> members;
    for (Vertex v = 0; static_cast<std::size_t>(v) < graphs[to]->order(); ++v) {
      members[class_of_code[code_of[to][v]]].push_back(v);
    }
    std::set<int> needed;
    for (int code : code_of[from]) needed.insert(class_of_code[code]);
    for (int cls : needed) {
      if (!FarMemberAlwaysExists(*graphs[to], members[cls], k, 2 * r + 1)) {
        return false;
      }
    }
    return true;
  };
  return condition(1, 0) && condition(0, 1);
}

}  // namespace gfl
