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

#ifndef SECGAME_ORACLE_HPP
#define SECGAME_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "secgame/game.hpp"

namespace secgame {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All positional strategies of `player`, odometer order over owned vertices
// (lowest vertex varies fastest). Throws CapExceeded past `cap` strategies.
std::vector<PositionalStrategy> enumerate_positional(const Arena& arena, Player player,
                                                     std::size_t cap = 1'000'000);

// Brute-force max-min and min-max over positional strategies under <=_which.
struct OracleTable {
    Player which = Player::One;
    std::vector<PayoffPair> maxmin;
    std::vector<PayoffPair> minmax;
    bool determined() const { return maxmin == minmax; }
};
OracleTable oracle_lex_values(const WeightedGame& game, Player which, std::size_t cap = 1'000'000);

// Both tables at once; each profile's payoffs are evaluated once.
std::array<OracleTable, 2> oracle_lex_values_both(const WeightedGame& game, std::size_t cap = 1'000'000);

// Stack factorization of a finite path into simple cycles plus a residual simple path.
struct CycleDecomposition {
    std::vector<std::vector<VertexId>> cycles;
    std::vector<VertexId> residual;
};
CycleDecomposition cycle_decomposition(const std::vector<VertexId>& path);

// Every play from v0 with at most max_stem stem vertices and max_cycle cycle
// vertices, once each: the stem is minimal and the cycle is primitive.
// The visitor returns false to stop early.
void enumerate_lassos(const Arena& arena, VertexId v0, int max_stem, int max_cycle,
                      const std::function<bool(const Lasso&)>& visit);
std::vector<Lasso> enumerate_lassos(const Arena& arena, VertexId v0, int max_stem, int max_cycle);

struct RandomGameOptions {
    int min_vertices = 1;
    int max_vertices = 5;
    int max_out_degree = 2;
    int max_weight = 2;  // weights drawn from {0, ..., max_weight}
    Measure measure = Measure::MeanPayoffInf;
    Rational discount = Rational(1, 2);
};
WeightedGame random_game(std::mt19937_64& rng, const RandomGameOptions& options);

} // namespace secgame

#endif
