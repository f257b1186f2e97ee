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

#include "secgame/lex.hpp"
#include "lex_internal.hpp"

#include <stdexcept>

namespace secgame {

using detail::require_measures;
using detail::with_roles;

namespace {

std::int64_t to_small(const Rational& r) {
    if (!r.is_integer() || !r.num().fits_slong_p()) throw UnsupportedError("scalarized weight exceeds 64-bit range");
    return r.to_int64();
}

LexValueTable solve_mp_one(const WeightedGame& game) {
    Scalarization sc = scalarize(game, Player::One);
    SolveResult1D r = solve_mean_payoff(sc.normalized.arena(), sc.weight, Player::One);
    std::vector<EdgeId> succ = profile_edges(game.arena(), r.strat_max, r.strat_min);
    LexValueTable t;
    t.which = Player::One;
    for (VertexId v = 0; v < game.num_vertices(); ++v) {
        Lasso l = positional_outcome(game.arena(), succ, v);
        t.value.push_back(denormalize_value(eval_lasso_payoff(sc.normalized, l), sc.info, game.measure(0)));
    }
    t.protagonist = {r.strat_max};
    t.antagonist = {r.strat_min};
    return t;
}

LexValueTable solve_disc_one(const WeightedGame& game) {
    const Arena& a = game.arena();
    const Rational& lambda = *game.discount();
    std::vector<Rational> w1(a.num_edges()), w2(a.num_edges());
    for (EdgeId e = 0; e < a.num_edges(); ++e) {
        w1[e] = game.weight(e, 0);
        w2[e] = game.weight(e, 1);
    }
    SolveResult1D first = solve_discounted(a, w1, Player::One, lambda);
    // Keep only edges that attain the optimum of the first component.
    EdgeMask optimal(a.num_edges(), 0);
    for (EdgeId e = 0; e < a.num_edges(); ++e) {
        Rational via = (Rational(1) - lambda) * w1[e] + lambda * first.value[a.edge(e).dst];
        optimal[e] = via == first.value[a.edge(e).src];
    }
    RestrictedArena sub = restrict_edges(a, optimal);
    for (VertexId v = 0; v < a.num_vertices(); ++v)
        if (sub.arena.out(v).empty()) throw std::logic_error("optimal edge set leaves a deadlock");
    std::vector<Rational> sub_w2;
    for (EdgeId e : sub.edge_origin) sub_w2.push_back(w2[e]);
    SolveResult1D second = solve_discounted(sub.arena, sub_w2, Player::Two, lambda);

    LexValueTable t;
    t.which = Player::One;
    for (VertexId v = 0; v < a.num_vertices(); ++v) t.value.push_back({first.value[v], second.value[v]});
    auto lift = [&](const PositionalStrategy& s) {
        PositionalStrategy out = s;
        for (auto& e : out.choice)
            if (e >= 0) e = sub.edge_origin[e];
        return out;
    };
    // Player 1 minimizes the second component inside the optimal edge set.
    t.protagonist = {lift(second.strat_min)};
    t.antagonist = {lift(second.strat_max)};
    return t;
}

} // namespace

Scalarization scalarize(const WeightedGame& game, Player which) {
    auto [norm, info] = normalize_weights(game);
    int own = index_of(which), other = 1 - own;
    Rational n(static_cast<long>(game.num_vertices()));
    Rational other_max = which == Player::One ? info.max_weight2 : info.max_weight1;
    Scalarization sc{n * n * other_max + Rational(1), {}, info, norm};
    for (EdgeId e = 0; e < norm.num_edges(); ++e)
        sc.weight.push_back(to_small(norm.weight(e, own) * sc.m - norm.weight(e, other)));
    return sc;
}

LexValueTable solve_lex_mp(const WeightedGame& game, Player which) {
    require_measures(game, {Measure::MeanPayoffInf, Measure::MeanPayoffSup}, "mean-payoff lexicographic solver");
    return with_roles(game, which, solve_mp_one);
}

LexValueTable solve_lex_disc(const WeightedGame& game, Player which) {
    require_measures(game, {Measure::Discounted}, "discounted lexicographic solver");
    if (!game.discount()) throw std::invalid_argument("discounted game without discount factor");
    return with_roles(game, which, solve_disc_one);
}

LexValueTable solve_lex(const WeightedGame& game, Player which) {
    if (!game.uniform_measure())
        throw UnsupportedError("unsupported measure combination: lexicographic games need both measures equal");
    switch (game.measure(0)) {
    case Measure::MeanPayoffInf:
    case Measure::MeanPayoffSup: return solve_lex_mp(game, which);
    case Measure::LimInf:
    case Measure::LimSup: return solve_lex_liminf(game, which);
    case Measure::Inf:
    case Measure::Sup: return solve_lex_inf(game, which);
    case Measure::Discounted: return solve_lex_disc(game, which);
    }
    throw std::logic_error("unknown measure");
}

} // namespace secgame
