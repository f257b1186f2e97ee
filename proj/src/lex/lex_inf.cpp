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
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "lex_internal.hpp"

namespace secgame {

using detail::require_measures;
using detail::with_roles;

VertexId AugmentedGame::step(VertexId a, EdgeId original_edge) const {
    const auto& outs = game.arena().out(a);
    for (EdgeId e : outs)
        if (origin[e] == original_edge) return game.arena().edge(e).dst;
    throw std::invalid_argument("edge does not leave the augmented vertex's base");
}

AugmentedGame augment(const WeightedGame& game, const std::vector<VertexId>& roots) {
    bool sup = game.measure(0) == Measure::Sup;
    std::array<std::vector<Rational>, 2> levels{detail::distinct_weights(game, 0), detail::distinct_weights(game, 1)};
    auto level_of = [&](int c, const Rational& w) {
        return static_cast<int>(std::lower_bound(levels[c].begin(), levels[c].end(), w) - levels[c].begin());
    };
    // -1 stands for "nothing seen yet".
    auto combine = [&](int cur, int k) { return cur < 0 ? k : (sup ? std::max(cur, k) : std::min(cur, k)); };
    auto label = [&](int c, int i) { return i < 0 ? std::string(sup ? "bot" : "top") : levels[c][i].str(); };

    AugmentedGame aug;
    aug.root.assign(game.num_vertices(), -1);
    std::map<std::tuple<VertexId, int, int>, VertexId> ids;
    std::vector<std::tuple<VertexId, int, int>> key_of;
    std::deque<VertexId> queue;
    auto intern = [&](VertexId v, int i1, int i2) {
        auto key = std::make_tuple(v, i1, i2);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        VertexId a = aug.game.add_vertex(game.name(v) + "[" + label(0, i1) + "," + label(1, i2) + "]", game.owner(v));
        ids.emplace(key, a);
        key_of.push_back(key);
        aug.base.push_back(v);
        queue.push_back(a);
        return a;
    };
    for (VertexId r : roots) aug.root[r] = intern(r, -1, -1);
    while (!queue.empty()) {
        VertexId a = queue.front();
        queue.pop_front();
        auto [v, i1, i2] = key_of[a];
        for (EdgeId e : game.arena().out(v)) {
            int j1 = combine(i1, level_of(0, game.weight(e, 0)));
            int j2 = combine(i2, level_of(1, game.weight(e, 1)));
            VertexId b = intern(game.arena().edge(e).dst, j1, j2);
            aug.game.add_edge(a, b, levels[0][j1], levels[1][j2]);
            aug.origin.push_back(e);
        }
    }
    Measure limit = sup ? Measure::LimSup : Measure::LimInf;
    aug.game.set_measure(0, limit);
    aug.game.set_measure(1, limit);
    return aug;
}

Lasso lift_lasso(const AugmentedGame& aug, const WeightedGame& game, const Lasso& lasso) {
    LassoEdges edges = lasso_edges(game.arena(), lasso);
    VertexId cur = aug.root.at(lasso.initial());
    if (cur < 0) throw std::invalid_argument("augmented game lacks the lasso's initial vertex");
    std::vector<VertexId> seq;
    for (EdgeId e : edges.stem) {
        seq.push_back(cur);
        cur = aug.step(cur, e);
    }
    std::map<std::pair<std::size_t, VertexId>, std::size_t> seen;
    std::size_t pos = 0;
    while (!seen.count({pos, cur})) {
        seen[{pos, cur}] = seq.size();
        seq.push_back(cur);
        cur = aug.step(cur, edges.cycle[pos]);
        pos = (pos + 1) % edges.cycle.size();
    }
    std::size_t k = seen[{pos, cur}];
    return Lasso{{seq.begin(), seq.begin() + k}, {seq.begin() + k, seq.end()}};
}

namespace {

struct ThreeStep {
    VertexSet x_region;
    VertexSet y_region;
    std::vector<EdgeId> x_strat;
    std::vector<EdgeId> y_strat;
};

EdgeId edge_into(const Arena& a, VertexId v, const VertexSet& region) {
    for (EdgeId e : a.out(v))
        if (region[a.edge(e).dst]) return e;
    return -1;
}

// X reaches s1; failing that Y reaches s2 in what remains; failing that X reaches s3
// in what remains. X wins the first and third regions, Y the rest.
ThreeStep three_step(const Arena& a, Player x, const VertexSet& s1, const VertexSet& s2, const VertexSet& s3) {
    int n = a.num_vertices();
    Player y = opponent(x);
    AttractorResult at1 = attractor(a, x, s1);
    VertexSet a1(n), t2(n);
    for (VertexId v = 0; v < n; ++v) {
        a1[v] = !at1.region[v];
        t2[v] = a1[v] && s2[v];
    }
    AttractorResult at2 = attractor(a, y, t2, &a1);
    VertexSet a2(n), t3(n);
    for (VertexId v = 0; v < n; ++v) {
        a2[v] = a1[v] && !at2.region[v];
        t3[v] = a2[v] && s3[v];
    }
    AttractorResult at3 = attractor(a, x, t3, &a2);
    ThreeStep r{VertexSet(n), VertexSet(n), std::vector<EdgeId>(n, -1), std::vector<EdgeId>(n, -1)};
    VertexSet rest(n);
    for (VertexId v = 0; v < n; ++v) {
        rest[v] = a2[v] && !at3.region[v];
        r.x_region[v] = at1.region[v] || at3.region[v];
        r.y_region[v] = !r.x_region[v];
    }
    for (VertexId v = 0; v < n; ++v) {
        EdgeId e = -1;
        if (a.owner(v) == x) {
            if (at1.region[v] && !s1[v]) e = at1.strategy[v];
            else if (at3.region[v] && !t3[v]) e = at3.strategy[v];
            else if (a2[v]) e = edge_into(a, v, a2);
            else if (a1[v]) e = edge_into(a, v, a1);
            if (e < 0) e = a.out(v).front();
            r.x_strat[v] = e;
        } else {
            if (at2.region[v] && !t2[v]) e = at2.strategy[v];
            else if (rest[v]) e = edge_into(a, v, rest);
            else if (a1[v]) e = edge_into(a, v, a1);
            if (e < 0) e = a.out(v).front();
            r.y_strat[v] = e;
        }
    }
    return r;
}

enum class Side { Primal, Dual };

ThresholdPartition partition(const WeightedGame& game, const PayoffPair& c, Side side) {
    if (game.measure(0) != Measure::Inf && game.measure(0) != Measure::Sup)
        throw UnsupportedError("threshold partition needs Inf or Sup measures");
    bool sup = game.measure(0) == Measure::Sup;
    SplitArena split = split_arena(game.arena());
    int n = split.arena.num_vertices();
    VertexSet s1(n, 0), s2(n, 0), s3(n, 0);
    for (EdgeId e = 0; e < game.num_edges(); ++e) {
        VertexId s = split.num_original + e;
        const Rational& a = game.weight(e, 0);
        const Rational& b = game.weight(e, 1);
        s3[s] = a == c.p1;
        if (!sup) {
            s1[s] = a < c.p1;
            s2[s] = side == Side::Primal ? b <= c.p2 : b < c.p2;
        } else {
            s1[s] = a > c.p1;
            s2[s] = side == Side::Primal ? b > c.p2 : b >= c.p2;
        }
    }
    // Inf: player 2 plays X. Sup: player 1 plays X.
    Player x = sup ? Player::One : Player::Two;
    ThreeStep t = three_step(split.arena, x, s1, s2, s3);
    const VertexSet& r1 = x == Player::One ? t.x_region : t.y_region;
    const VertexSet& r2 = x == Player::One ? t.y_region : t.x_region;
    const auto& c1 = x == Player::One ? t.x_strat : t.y_strat;
    const auto& c2 = x == Player::One ? t.y_strat : t.x_strat;
    ThresholdPartition p;
    p.win1.assign(r1.begin(), r1.begin() + split.num_original);
    p.win2.assign(r2.begin(), r2.begin() + split.num_original);
    p.strat1 = detail::project_split(split, Player::One, c1);
    p.strat2 = detail::project_split(split, Player::Two, c2);
    return p;
}

LexValueTable inf_one(const WeightedGame& game) {
    int n = game.num_vertices();
    std::vector<VertexId> roots(n);
    for (VertexId v = 0; v < n; ++v) roots[v] = v;
    AugmentedGame aug = augment(game, roots);
    LexValueTable lim = solve_lex_liminf(aug.game, Player::One);
    LexValueTable t;
    t.which = Player::One;
    t.uniform = false;
    std::map<std::pair<Rational, Rational>, std::pair<ThresholdPartition, ThresholdPartition>> cache;
    for (VertexId v = 0; v < n; ++v) {
        const PayoffPair& val = lim.value[aug.root[v]];
        t.value.push_back(val);
        auto key = std::make_pair(val.p1, val.p2);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, std::make_pair(partition(game, val, Side::Primal), partition(game, val, Side::Dual))).first;
        const auto& [primal, dual] = it->second;
        if (!primal.win1[v] || !dual.win2[v]) throw std::logic_error("threshold partition disagrees with the value");
        t.protagonist.push_back(primal.strat1);
        t.antagonist.push_back(dual.strat2);
    }
    return t;
}

} // namespace

ThresholdPartition inf_partition(const WeightedGame& game, const PayoffPair& threshold) {
    return partition(game, threshold, Side::Primal);
}

ThresholdPartition inf_dual_partition(const WeightedGame& game, const PayoffPair& threshold) {
    return partition(game, threshold, Side::Dual);
}

LexValueTable solve_lex_inf(const WeightedGame& game, Player which) {
    require_measures(game, {Measure::Inf, Measure::Sup}, "Inf/Sup lexicographic solver");
    return with_roles(game, which, inf_one);
}

} // namespace secgame
