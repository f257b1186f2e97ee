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

// Helpers shared by the lexicographic solvers.

#ifndef SECGAME_LEX_INTERNAL_HPP
#define SECGAME_LEX_INTERNAL_HPP

#include <initializer_list>
#include <string>

#include "secgame/lex.hpp"

namespace secgame::detail {

// Player 2's lexicographic game is player 1's game on the mirror; map its table back.
inline LexValueTable unmirror(LexValueTable t) {
    t.which = Player::Two;
    for (auto& v : t.value) std::swap(v.p1, v.p2);
    for (auto& s : t.protagonist) s.player = opponent(s.player);
    for (auto& s : t.antagonist) s.player = opponent(s.player);
    return t;
}

template <typename Solve1>
LexValueTable with_roles(const WeightedGame& game, Player which, Solve1 solve1) {
    if (which == Player::One) return solve1(game);
    return unmirror(solve1(game.mirrored()));
}

inline void require_measures(const WeightedGame& game, std::initializer_list<Measure> allowed, const char* what) {
    if (!game.uniform_measure())
        throw UnsupportedError(std::string("unsupported measure combination: ") + what + " needs both measures equal");
    for (Measure m : allowed)
        if (game.measure(0) == m) return;
    throw UnsupportedError(std::string(what) + " does not handle measure " + std::string(measure_name(game.measure(0))));
}

// Distinct weights of one component, ascending.
std::vector<Rational> distinct_weights(const WeightedGame& game, int component);

// Projects a split-arena strategy to the original arena.
PositionalStrategy project_split(const SplitArena& split, Player p, const std::vector<EdgeId>& split_choice);

// Copy of the game keeping only enabled edges; origin maps new edge ids to old.
WeightedGame restrict_game(const WeightedGame& game, const EdgeMask& enabled, std::vector<EdgeId>* origin = nullptr);

} // namespace secgame::detail

#endif
