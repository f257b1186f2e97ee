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

#ifndef SECGAME_STRATEGY_HPP
#define SECGAME_STRATEGY_HPP

#include <string>
#include <vector>

#include "secgame/game.hpp"

namespace secgame {

// Finite-memory strategy (M, m0, delta, nu). The memory is updated on every
// vertex entered, including the initial one; the choice at an owned vertex v
// is read from the state reached after reading v.
struct MealyStrategy {
    Player player = Player::One;
    int num_vertices = 0;
    int num_states = 0;
    int initial = 0;
    std::vector<std::string> labels;  // one short token per state
    std::vector<int> update;          // num_states x num_vertices
    std::vector<EdgeId> choose;       // num_states x num_vertices, -1 at opponent vertices

    int next_state(int m, VertexId v) const { return update[m * num_vertices + v]; }
    EdgeId choice(int m, VertexId v) const { return choose[m * num_vertices + v]; }

    // Memoryless machine with a single state.
    static MealyStrategy from_positional(const Arena& arena, const PositionalStrategy& s);
};

struct StrategyProfile {
    MealyStrategy strat1;
    MealyStrategy strat2;

    const MealyStrategy& of(Player p) const { return p == Player::One ? strat1 : strat2; }
};

// Throws std::invalid_argument when tables are malformed for the arena.
void check_machine(const Arena& arena, const MealyStrategy& m);

// Number of memory states visited on plays from v0 consistent with the machine,
// counting the initial state.
int reachable_states(const Arena& arena, const MealyStrategy& m, VertexId v0);

// Outcome of a machine against a positional strategy of the other player.
Lasso outcome_against_positional(const Arena& arena, const MealyStrategy& m, const PositionalStrategy& other,
                                 VertexId v0);

} // namespace secgame

#endif
