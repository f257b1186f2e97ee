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

#ifndef SECGAME_EQUILIBRIUM_HPP
#define SECGAME_EQUILIBRIUM_HPP

#include <optional>

#include "secgame/lex.hpp"
#include "secgame/strategy.hpp"

namespace secgame {

// Value tables of both lexicographic games of one weighted game.
struct LexTables {
    LexValueTable t1;
    LexValueTable t2;
    const LexValueTable& of(Player p) const { return p == Player::One ? t1 : t2; }
};
LexTables solve_both(const WeightedGame& game);

// Inf and Sup games are handled on their augmentation from a single root.
bool needs_augmentation(const WeightedGame& game);
struct AugmentedTables {
    AugmentedGame aug;
    LexTables tables;
};
AugmentedTables solve_augmented(const WeightedGame& game, VertexId v0);

struct SecureEquilibrium {
    StrategyProfile profile;
    Lasso outcome;
    PayoffPair payoff;
};

// Both measures must be equal; throws UnsupportedError otherwise.
SecureEquilibrium synthesize_secure_eq(const WeightedGame& game, VertexId v0);

// Upper bound on reachable memory states of synthesized machines.
long long memory_bound(const WeightedGame& game);

// Machine that follows the lasso and, once the opponent leaves it, plays `punish` forever.
MealyStrategy punishing_machine(const Arena& arena, Player player, const Lasso& track,
                                const PositionalStrategy& punish);

// Machine on the original arena that simulates a machine of the augmented game.
MealyStrategy project_machine(const AugmentedGame& aug, const WeightedGame& game, const MealyStrategy& m,
                              VertexId v0);

Lasso outcome_of_profile(const WeightedGame& game, VertexId v0, const StrategyProfile& profile);

// Every position k of the lasso (stem, then one round of the cycle) satisfies
// value_i(rho_k) <=_i payoff(rho from k) for both players. The tables belong to
// the game the lasso lives in.
bool check_secure_outcome(const WeightedGame& game, const Lasso& rho, const LexTables& tables);

// Same check, solving the tables (on the augmentation for Inf and Sup).
bool is_secure_outcome(const WeightedGame& game, const Lasso& rho);

// Whether the outcome of the profile from v0 is the outcome of some secure equilibrium.
bool verify_profile_secure(const WeightedGame& game, VertexId v0, const StrategyProfile& profile);

} // namespace secgame

#endif
