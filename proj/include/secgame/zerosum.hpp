/*
 * Copyright 2026 The secgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SECGAME_ZEROSUM_HPP
#define SECGAME_ZEROSUM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "secgame/game.hpp"

namespace secgame {

using VertexSet = std::vector<char>;  // membership mask over vertices
using EdgeMask = std::vector<char>;   // membership mask over edges

struct AttractorResult {
    VertexSet region;
    std::vector<EdgeId> strategy;  // defined on owned vertices of region minus target, -1 elsewhere
};

// Backward fixpoint for `player` towards `target`. With `within`, only vertices
// of that subarena (and edges between them) are considered.
AttractorResult attractor(const Arena& arena, Player player, const VertexSet& target,
                          const VertexSet* within = nullptr);

// Parity game with the max-priority-seen-infinitely-often condition; `even`
// wins when that priority is even.
struct PriorityGame {
    const Arena* arena;
    std::vector<int> priority;
    Player even = Player::One;
};

struct ParityResult {
    std::vector<Player> winner;             // per vertex
    std::array<std::vector<EdgeId>, 2> strategy;  // indexed by player; defined on owned winning vertices
    bool wins(Player p, VertexId v) const { return winner[v] == p; }
};

// Zielonka's recursive algorithm. Any non-negative priorities are accepted;
// the solvers in this library use at most four.
ParityResult solve_parity(const PriorityGame& game);

struct SolveResult1D {
    std::vector<Rational> value;
    PositionalStrategy strat_max;
    PositionalStrategy strat_min;
};

// Exact mean-payoff values and uniform optimal positional strategies.
SolveResult1D solve_mean_payoff(const Arena& arena, const std::vector<std::int64_t>& weight, Player maximizer);

// Values only (the same exact numbers); used by the strategy dichotomy.
std::vector<Rational> mean_payoff_values(const Arena& arena, const std::vector<std::int64_t>& weight,
                                         Player maximizer);

// Mean value of the best (or worst) cycle reachable from each vertex when every
// vertex's choices are restricted to the enabled edges; all choices belong to one agent.
std::vector<Rational> one_player_mean_values(const Arena& arena, const std::vector<std::int64_t>& weight,
                                             const EdgeMask& enabled, bool maximize);

// Exact discounted values with factor lambda in (0,1) and optimal positional strategies.
SolveResult1D solve_discounted(const Arena& arena, const std::vector<Rational>& weight, Player maximizer,
                               const Rational& lambda);

// Infinite path from `from` that visits A1 and A2 finitely often and B1 and B2
// infinitely often. Returns a witness lasso when one exists.
std::optional<Lasso> find_rabin2_path(const Arena& graph, const VertexSet& a1, const VertexSet& b1,
                                      const VertexSet& a2, const VertexSet& b2, VertexId from);

// Sub-arena keeping only enabled edges (vertex ids unchanged); edge_origin maps new ids to old.
struct RestrictedArena {
    Arena arena;
    std::vector<EdgeId> edge_origin;
};
RestrictedArena restrict_edges(const Arena& arena, const EdgeMask& enabled);

// Uniform strategy extraction by halving one vertex's edge set at a time.
// `preserves(mask)` answers whether the game restricted to `mask` keeps all values.
PositionalStrategy edge_dichotomy(const Arena& arena, Player player,
                                  const std::function<bool(const EdgeMask&)>& preserves);

// Strongly connected components in reverse topological order (sinks first),
// restricted to `alive` vertices and `enabled` edges when given.
std::vector<std::vector<VertexId>> strongly_connected_components(const Arena& arena, const VertexSet* alive = nullptr,
                                                                 const EdgeMask* enabled = nullptr);

} // namespace secgame

#endif
