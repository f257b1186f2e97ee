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

#ifndef SECGAME_LEX_HPP
#define SECGAME_LEX_HPP

#include <map>
#include <vector>

#include "secgame/game.hpp"
#include "secgame/zerosum.hpp"

namespace secgame {

// Values of the lexicographic game where `which` maximizes its own component
// first and minimizes the other one second.
struct LexValueTable {
    Player which = Player::One;
    std::vector<PayoffPair> value;
    // Uniform tables hold one strategy per side; otherwise one per initial vertex.
    bool uniform = true;
    std::vector<PositionalStrategy> protagonist;
    std::vector<PositionalStrategy> antagonist;

    const PositionalStrategy& strategy_of(Player p, VertexId from) const {
        const auto& v = p == which ? protagonist : antagonist;
        return uniform ? v.front() : v[from];
    }
};

enum class StrategyExtraction { CombineThresholds, EdgeDichotomy };

// Dispatches on the (shared) measure. Throws UnsupportedError for mixed measures.
LexValueTable solve_lex(const WeightedGame& game, Player which);

LexValueTable solve_lex_mp(const WeightedGame& game, Player which);
LexValueTable solve_lex_liminf(const WeightedGame& game, Player which,
                               StrategyExtraction extraction = StrategyExtraction::CombineThresholds);
LexValueTable solve_lex_inf(const WeightedGame& game, Player which);
LexValueTable solve_lex_disc(const WeightedGame& game, Player which);

// Can `which` force threshold <=_which LimInf (or LimSup) of the play from v?
bool solve_lex_liminf_threshold(const WeightedGame& game, VertexId v, const PayoffPair& threshold, Player which);

// Scalarization constant |V|^2 * max r_other + 1 on natural weights, and the scalar weights.
struct Scalarization {
    Rational m;
    std::vector<std::int64_t> weight;
    NormalizationInfo info;
    WeightedGame normalized;
};
Scalarization scalarize(const WeightedGame& game, Player which);

// Game with each edge replaced by an intermediate vertex carrying its weights.
// Original vertices keep their ids; the vertex for edge e is num_vertices + e
// and is owned by player 1.
struct SplitArena {
    Arena arena;
    int num_original = 0;
    std::vector<EdgeId> origin;  // split-arena edge -> original edge
    bool is_edge_vertex(VertexId s) const { return s >= num_original; }
    EdgeId edge_of(VertexId s) const { return s - num_original; }
};
SplitArena split_arena(const Arena& arena);

// Partition for Inf (or Sup) thresholds with player 1 as protagonist.
// win1: player 1 forces threshold <=_1 payoff; win2: player 2 forces payoff <_1 threshold.
struct ThresholdPartition {
    VertexSet win1;
    VertexSet win2;
    PositionalStrategy strat1;  // meaningful on win1
    PositionalStrategy strat2;  // meaningful on win2
};
ThresholdPartition inf_partition(const WeightedGame& game, const PayoffPair& threshold);
// Dual split: win1 forces threshold <_1 payoff; win2 forces payoff <=_1 threshold.
ThresholdPartition inf_dual_partition(const WeightedGame& game, const PayoffPair& threshold);

// Product of the arena with running componentwise minima (maxima for Sup).
// Weights are the running extrema and the measures become LimInf (LimSup).
struct AugmentedGame {
    WeightedGame game;
    std::vector<VertexId> base;          // original vertex of each augmented vertex
    std::vector<EdgeId> origin;          // original edge of each augmented edge
    std::vector<VertexId> root;          // augmented vertex (v, none, none), -1 if not built
    VertexId step(VertexId a, EdgeId original_edge) const;
};
AugmentedGame augment(const WeightedGame& game, const std::vector<VertexId>& roots);

// Lifts a lasso of the original game from its initial vertex into the augmented game.
Lasso lift_lasso(const AugmentedGame& aug, const WeightedGame& game, const Lasso& lasso);

} // namespace secgame

#endif
