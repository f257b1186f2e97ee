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

#include <algorithm>
#include <optional>
#include <set>

#include "lex_internal.hpp"

namespace secgame {

namespace detail {

std::vector<Rational> distinct_weights(const WeightedGame& game, int component) {
    std::set<Rational> s;
    for (EdgeId e = 0; e < game.num_edges(); ++e) s.insert(game.weight(e, component));
    return {s.begin(), s.end()};
}

PositionalStrategy project_split(const SplitArena& split, Player p, const std::vector<EdgeId>& split_choice) {
    PositionalStrategy out{p, std::vector<EdgeId>(split.num_original, -1)};
    for (VertexId v = 0; v < split.num_original; ++v)
        if (split.arena.owner(v) == p && split_choice[v] >= 0) out.choice[v] = split.origin[split_choice[v]];
    return out;
}

WeightedGame restrict_game(const WeightedGame& game, const EdgeMask& enabled, std::vector<EdgeId>* origin) {
    WeightedGame g;
    for (VertexId v = 0; v < game.num_vertices(); ++v) g.add_vertex(game.name(v), game.owner(v));
    for (EdgeId e = 0; e < game.num_edges(); ++e) {
        if (!enabled[e]) continue;
        g.add_edge(game.arena().edge(e).src, game.arena().edge(e).dst, game.weight(e, 0), game.weight(e, 1));
        if (origin) origin->push_back(e);
    }
    g.set_measure(0, game.measure(0));
    g.set_measure(1, game.measure(1));
    g.set_discount(game.discount());
    return g;
}

} // namespace detail

using detail::require_measures;
using detail::with_roles;

SplitArena split_arena(const Arena& arena) {
    SplitArena s;
    s.num_original = arena.num_vertices();
    for (VertexId v = 0; v < arena.num_vertices(); ++v) s.arena.add_vertex(arena.owner(v));
    for (EdgeId e = 0; e < arena.num_edges(); ++e) s.arena.add_vertex(Player::One);
    for (VertexId v = 0; v < arena.num_vertices(); ++v)
        for (EdgeId e : arena.out(v)) {
            s.arena.add_edge(v, s.num_original + e);
            s.origin.push_back(e);
        }
    for (EdgeId e = 0; e < arena.num_edges(); ++e) {
        s.arena.add_edge(s.num_original + e, arena.edge(e).dst);
        s.origin.push_back(e);
    }
    return s;
}

namespace {

// Parity encoding of "threshold <=_1 LimInf" (or LimSup) on the split arena.
// Original vertices get the lowest priority so they never decide a play.
PriorityGame threshold_game(const SplitArena& split, const WeightedGame& game, const PayoffPair& c) {
    bool limsup = game.measure(0) == Measure::LimSup;
    PriorityGame pg{&split.arena, std::vector<int>(split.arena.num_vertices(), 0), limsup ? Player::Two : Player::One};
    for (EdgeId e = 0; e < game.num_edges(); ++e) {
        const Rational& a = game.weight(e, 0);
        const Rational& b = game.weight(e, 1);
        int& p = pg.priority[split.num_original + e];
        if (!limsup) {
            // finitely often a < alpha, and (finitely often a = alpha or infinitely often b <= beta)
            if (a < c.p1) p = 3;
            else if (b <= c.p2) p = 2;
            else if (a == c.p1) p = 1;
            else p = 0;
        } else {
            // infinitely often a > alpha, or (infinitely often a = alpha and finitely often b > beta)
            if (a > c.p1) p = 3;
            else if (b > c.p2) p = 2;
            else if (a == c.p1) p = 1;
            else p = 0;
        }
    }
    return pg;
}

struct LimInfCore {
    std::vector<PayoffPair> value;
    PositionalStrategy prot;
    PositionalStrategy ant;
};

// Walks candidate thresholds in <=_1-descending order. Each vertex takes the first
// threshold it wins. Player 1 then follows that threshold's winning strategy; player 2
// follows its strategy from the preceding (refuted) threshold.
LimInfCore liminf_core(const WeightedGame& game) {
    int n = game.num_vertices();
    auto firsts = detail::distinct_weights(game, 0);
    auto seconds = detail::distinct_weights(game, 1);
    SplitArena split = split_arena(game.arena());
    std::vector<std::optional<PayoffPair>> value(n);
    std::vector<EdgeId> prot_split(split.arena.num_vertices(), -1), ant_split(split.arena.num_vertices(), -1);
    std::optional<ParityResult> prev;
    int left = n;
    for (auto a = firsts.rbegin(); a != firsts.rend() && left > 0; ++a)
        for (auto b = seconds.begin(); b != seconds.end() && left > 0; ++b) {
            PayoffPair c{*a, *b};
            ParityResult res = solve_parity(threshold_game(split, game, c));
            for (VertexId v = 0; v < n; ++v) {
                if (value[v] || !res.wins(Player::One, v)) continue;
                value[v] = c;
                --left;
                if (game.owner(v) == Player::One) prot_split[v] = res.strategy[0][v];
                else if (prev) ant_split[v] = prev->strategy[1][v];
            }
            prev = std::move(res);
        }
    LimInfCore core;
    for (VertexId v = 0; v < n; ++v) {
        if (!value[v]) throw std::logic_error("no candidate threshold accepted");
        core.value.push_back(*value[v]);
    }
    core.prot = detail::project_split(split, Player::One, prot_split);
    core.ant = detail::project_split(split, Player::Two, ant_split);
    // Vertices valued at the top candidate: every antagonist choice is optimal.
    for (VertexId v = 0; v < n; ++v)
        if (game.owner(v) == Player::Two && core.ant.choice[v] < 0) core.ant.choice[v] = game.arena().out(v).front();
    return core;
}

LexValueTable liminf_one(const WeightedGame& game, StrategyExtraction extraction) {
    LimInfCore core = liminf_core(game);
    LexValueTable t;
    t.which = Player::One;
    t.value = core.value;
    if (extraction == StrategyExtraction::CombineThresholds) {
        t.protagonist = {core.prot};
        t.antagonist = {core.ant};
        return t;
    }
    auto preserves = [&](const EdgeMask& mask) {
        return liminf_core(detail::restrict_game(game, mask)).value == core.value;
    };
    t.protagonist = {edge_dichotomy(game.arena(), Player::One, preserves)};
    t.antagonist = {edge_dichotomy(game.arena(), Player::Two, preserves)};
    return t;
}

} // namespace

LexValueTable solve_lex_liminf(const WeightedGame& game, Player which, StrategyExtraction extraction) {
    require_measures(game, {Measure::LimInf, Measure::LimSup}, "limit lexicographic solver");
    return with_roles(game, which, [&](const WeightedGame& g) { return liminf_one(g, extraction); });
}

bool solve_lex_liminf_threshold(const WeightedGame& game, VertexId v, const PayoffPair& threshold, Player which) {
    require_measures(game, {Measure::LimInf, Measure::LimSup}, "limit threshold decision");
    WeightedGame g = which == Player::One ? game : game.mirrored();
    PayoffPair c = which == Player::One ? threshold : PayoffPair{threshold.p2, threshold.p1};
    SplitArena split = split_arena(g.arena());
    return solve_parity(threshold_game(split, g, c)).wins(Player::One, v);
}

} // namespace secgame
