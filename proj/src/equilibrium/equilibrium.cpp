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

#include "secgame/equilibrium.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace secgame {

LexTables solve_both(const WeightedGame& game) {
    return LexTables{solve_lex(game, Player::One), solve_lex(game, Player::Two)};
}

bool needs_augmentation(const WeightedGame& game) {
    return game.measure(0) == Measure::Inf || game.measure(0) == Measure::Sup;
}

AugmentedTables solve_augmented(const WeightedGame& game, VertexId v0) {
    AugmentedTables r{augment(game, {v0}), {}};
    r.tables = LexTables{solve_lex_liminf(r.aug.game, Player::One), solve_lex_liminf(r.aug.game, Player::Two)};
    return r;
}

long long memory_bound(const WeightedGame& game) {
    long long n = game.num_vertices(), e = game.num_edges();
    return needs_augmentation(game) ? n * e * e + 3 : n + 2;
}

MealyStrategy punishing_machine(const Arena& arena, Player player, const Lasso& track,
                                const PositionalStrategy& punish) {
    std::vector<VertexId> seq = track.stem;
    seq.insert(seq.end(), track.cycle.begin(), track.cycle.end());
    int len = static_cast<int>(seq.size());
    int loop_start = static_cast<int>(track.stem.size());
    auto next = [&](int t) { return t + 1 < len ? t + 1 : loop_start; };

    int n = arena.num_vertices();
    int punish_state = len + 1;
    MealyStrategy m;
    m.player = player;
    m.num_vertices = n;
    m.num_states = len + 2;
    m.initial = 0;
    m.labels.push_back("start");
    for (int t = 0; t < len; ++t) m.labels.push_back("track" + std::to_string(t));
    m.labels.push_back("punish");
    m.update.assign(static_cast<std::size_t>(m.num_states) * n, punish_state);
    m.choose.assign(static_cast<std::size_t>(m.num_states) * n, -1);

    // State 1 + t: the play so far follows the track and sits at seq[t].
    m.update[seq[0]] = 1;
    for (int t = 0; t < len; ++t) m.update[static_cast<std::size_t>(1 + t) * n + seq[next(t)]] = 1 + next(t);
    for (int s = 0; s < m.num_states; ++s)
        for (VertexId v = 0; v < n; ++v) {
            if (arena.owner(v) != player) continue;
            EdgeId e = punish.choice[v];
            if (s >= 1 && s <= len && seq[s - 1] == v) e = arena.find_edge(v, seq[next(s - 1)]);
            m.choose[static_cast<std::size_t>(s) * n + v] = e;
        }
    return m;
}

MealyStrategy project_machine(const AugmentedGame& aug, const WeightedGame& game, const MealyStrategy& m,
                              VertexId v0) {
    const Arena& arena = game.arena();
    int n = arena.num_vertices();
    // Projected state: (machine state, last augmented vertex), -1 before the first read.
    std::map<std::pair<int, VertexId>, int> ids;
    std::vector<std::pair<int, VertexId>> keys;
    std::deque<int> queue;
    auto intern = [&](int q, VertexId a) {
        auto [it, fresh] = ids.emplace(std::make_pair(q, a), static_cast<int>(keys.size()));
        if (fresh) {
            keys.emplace_back(q, a);
            queue.push_back(it->second);
        }
        return it->second;
    };
    auto own_choice = [&](int q, VertexId a) { return aug.origin[m.choice(q, a)]; };
    // Successor on reading w, or -1 when the read is inconsistent with the machine.
    auto successor = [&](int s, VertexId w) -> int {
        auto [q, a] = keys[s];
        if (a < 0) {
            if (w != v0) return -1;
            VertexId r = aug.root[v0];
            return intern(m.next_state(q, r), r);
        }
        VertexId v = aug.base[a];
        EdgeId e = arena.find_edge(v, w);
        if (e < 0) return -1;
        if (arena.owner(v) == m.player && own_choice(q, a) != e) return -1;
        VertexId b = aug.step(a, e);
        return intern(m.next_state(q, b), b);
    };

    intern(m.initial, -1);
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (VertexId w = 0; w < n; ++w) successor(s, w);
    }

    MealyStrategy p;
    p.player = m.player;
    p.num_vertices = n;
    p.num_states = static_cast<int>(keys.size());
    p.initial = 0;
    p.update.resize(static_cast<std::size_t>(p.num_states) * n);
    p.choose.assign(static_cast<std::size_t>(p.num_states) * n, -1);
    for (int s = 0; s < p.num_states; ++s) {
        auto [q, a] = keys[s];
        p.labels.push_back(a < 0 ? m.labels[q] : m.labels[q] + "@" + aug.game.name(a));
        for (VertexId w = 0; w < n; ++w) {
            int t = successor(s, w);
            p.update[static_cast<std::size_t>(s) * n + w] = t < 0 ? s : t;
            if (arena.owner(w) != m.player) continue;
            EdgeId e = a >= 0 && aug.base[a] == w ? own_choice(q, a) : arena.out(w).front();
            p.choose[static_cast<std::size_t>(s) * n + w] = e;
        }
    }
    return p;
}

namespace {

SecureEquilibrium synthesize_on(const WeightedGame& game, VertexId v0, const LexTables& tables) {
    const Arena& arena = game.arena();
    const PositionalStrategy& best1 = tables.t1.strategy_of(Player::One, v0);
    const PositionalStrategy& best2 = tables.t2.strategy_of(Player::Two, v0);
    Lasso outcome = positional_outcome(arena, profile_edges(arena, best1, best2), v0);
    // Player i punishes a deviation of the opponent j with its antagonist strategy of j's game.
    StrategyProfile profile{
        punishing_machine(arena, Player::One, outcome, tables.t2.strategy_of(Player::One, v0)),
        punishing_machine(arena, Player::Two, outcome, tables.t1.strategy_of(Player::Two, v0))};
    return SecureEquilibrium{profile, outcome, eval_lasso_payoff(game, outcome)};
}

Lasso suffix(const Lasso& rho, std::size_t k) {
    if (k < rho.stem.size()) return Lasso{{rho.stem.begin() + k, rho.stem.end()}, rho.cycle};
    std::size_t j = k - rho.stem.size();
    Lasso r;
    r.cycle.assign(rho.cycle.begin() + j, rho.cycle.end());
    r.cycle.insert(r.cycle.end(), rho.cycle.begin(), rho.cycle.begin() + j);
    return r;
}

} // namespace

SecureEquilibrium synthesize_secure_eq(const WeightedGame& game, VertexId v0) {
    if (!game.uniform_measure())
        throw UnsupportedError("unsupported measure combination: synthesis needs both measures equal");
    if (!needs_augmentation(game)) return synthesize_on(game, v0, solve_both(game));

    AugmentedTables at = solve_augmented(game, v0);
    SecureEquilibrium lifted = synthesize_on(at.aug.game, at.aug.root[v0], at.tables);
    StrategyProfile profile{project_machine(at.aug, game, lifted.profile.strat1, v0),
                            project_machine(at.aug, game, lifted.profile.strat2, v0)};
    Lasso outcome = outcome_of_profile(game, v0, profile);
    return SecureEquilibrium{profile, outcome, eval_lasso_payoff(game, outcome)};
}

Lasso outcome_of_profile(const WeightedGame& game, VertexId v0, const StrategyProfile& profile) {
    const Arena& arena = game.arena();
    const MealyStrategy& m1 = profile.strat1;
    const MealyStrategy& m2 = profile.strat2;
    check_machine(arena, m1);
    check_machine(arena, m2);
    std::map<std::tuple<VertexId, int, int>, std::size_t> seen;
    std::vector<VertexId> path;
    VertexId v = v0;
    int s1 = m1.next_state(m1.initial, v0), s2 = m2.next_state(m2.initial, v0);
    while (!seen.count({v, s1, s2})) {
        seen[{v, s1, s2}] = path.size();
        path.push_back(v);
        EdgeId e = arena.owner(v) == Player::One ? m1.choice(s1, v) : m2.choice(s2, v);
        v = arena.edge(e).dst;
        s1 = m1.next_state(s1, v);
        s2 = m2.next_state(s2, v);
    }
    std::size_t k = seen[{v, s1, s2}];
    return Lasso{{path.begin(), path.begin() + k}, {path.begin() + k, path.end()}};
}

bool check_secure_outcome(const WeightedGame& game, const Lasso& rho, const LexTables& tables) {
    lasso_edges(game.arena(), rho);
    if (tables.t1.value.size() != static_cast<std::size_t>(game.num_vertices()) ||
        tables.t2.value.size() != tables.t1.value.size())
        throw std::invalid_argument("value tables do not match the game");
    std::size_t positions = rho.stem.size() + rho.cycle.size();
    for (std::size_t k = 0; k < positions; ++k) {
        Lasso tail = suffix(rho, k);
        PayoffPair pay = eval_lasso_payoff(game, tail);
        VertexId v = tail.initial();
        if (!lex_leq(tables.t1.value[v], pay, Player::One)) return false;
        if (!lex_leq(tables.t2.value[v], pay, Player::Two)) return false;
    }
    return true;
}

bool is_secure_outcome(const WeightedGame& game, const Lasso& rho) {
    if (!game.uniform_measure())
        throw UnsupportedError("unsupported measure combination: the outcome check needs both measures equal");
    if (!needs_augmentation(game)) return check_secure_outcome(game, rho, solve_both(game));
    AugmentedTables at = solve_augmented(game, rho.initial());
    return check_secure_outcome(at.aug.game, lift_lasso(at.aug, game, rho), at.tables);
}

bool verify_profile_secure(const WeightedGame& game, VertexId v0, const StrategyProfile& profile) {
    return is_secure_outcome(game, outcome_of_profile(game, v0, profile));
}

} // namespace secgame
