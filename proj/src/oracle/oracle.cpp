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

#include "secgame/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace secgame {

std::vector<PositionalStrategy> enumerate_positional(const Arena& arena, Player player, std::size_t cap) {
    std::vector<VertexId> owned;
    std::size_t total = 1;
    for (VertexId v = 0; v < arena.num_vertices(); ++v) {
        if (arena.owner(v) != player) continue;
        owned.push_back(v);
        total *= arena.out(v).size();
        if (total > cap) throw CapExceeded("positional strategy count exceeds the cap");
    }
    std::vector<PositionalStrategy> out;
    out.reserve(total);
    std::vector<std::size_t> digit(owned.size(), 0);
    for (std::size_t k = 0; k < total; ++k) {
        PositionalStrategy s{player, std::vector<EdgeId>(arena.num_vertices(), -1)};
        for (std::size_t i = 0; i < owned.size(); ++i) s.choice[owned[i]] = arena.out(owned[i])[digit[i]];
        out.push_back(std::move(s));
        for (std::size_t i = 0; i < owned.size(); ++i) {
            if (++digit[i] < arena.out(owned[i]).size()) break;
            digit[i] = 0;
        }
    }
    return out;
}

namespace {

// Follows successor edges from v until a vertex repeats.
Lasso follow(const Arena& arena, const std::vector<EdgeId>& succ, VertexId v) {
    std::vector<int> pos(arena.num_vertices(), -1);
    std::vector<VertexId> path;
    while (pos[v] < 0) {
        pos[v] = static_cast<int>(path.size());
        path.push_back(v);
        v = arena.edge(succ[v]).dst;
    }
    return Lasso{{path.begin(), path.begin() + pos[v]}, {path.begin() + pos[v], path.end()}};
}

} // namespace

std::array<OracleTable, 2> oracle_lex_values_both(const WeightedGame& game, std::size_t cap) {
    const Arena& arena = game.arena();
    int n = arena.num_vertices();
    auto s1 = enumerate_positional(arena, Player::One, cap);
    auto s2 = enumerate_positional(arena, Player::Two, cap);
    if (s1.size() * s2.size() > cap) throw CapExceeded("positional profile count exceeds the cap");
    // payoff[(i * |s2| + j) * n + v]
    std::vector<PayoffPair> payoff(s1.size() * s2.size() * n);
    std::vector<EdgeId> succ(n);
    for (std::size_t i = 0; i < s1.size(); ++i)
        for (std::size_t j = 0; j < s2.size(); ++j) {
            for (VertexId v = 0; v < n; ++v)
                succ[v] = arena.owner(v) == Player::One ? s1[i].choice[v] : s2[j].choice[v];
            for (VertexId v = 0; v < n; ++v)
                payoff[(i * s2.size() + j) * n + v] = eval_lasso_payoff(game, follow(arena, succ, v));
        }

    std::array<OracleTable, 2> out;
    for (Player which : {Player::One, Player::Two}) {
        OracleTable& t = out[index_of(which)];
        t.which = which;
        // The protagonist picks rows when it is player 1, columns otherwise.
        std::size_t rows = which == Player::One ? s1.size() : s2.size();
        std::size_t cols = which == Player::One ? s2.size() : s1.size();
        auto at = [&](std::size_t r, std::size_t c, VertexId v) -> const PayoffPair& {
            std::size_t i = which == Player::One ? r : c, j = which == Player::One ? c : r;
            return payoff[(i * s2.size() + j) * n + v];
        };
        auto less = [&](const PayoffPair& a, const PayoffPair& b) {
            return lex_compare(a, b, which) == std::strong_ordering::less;
        };
        for (VertexId v = 0; v < n; ++v) {
            const PayoffPair* best = nullptr;
            for (std::size_t r = 0; r < rows; ++r) {
                const PayoffPair* worst = &at(r, 0, v);
                for (std::size_t c = 1; c < cols; ++c)
                    if (less(at(r, c, v), *worst)) worst = &at(r, c, v);
                if (!best || less(*best, *worst)) best = worst;
            }
            t.maxmin.push_back(*best);
            const PayoffPair* low = nullptr;
            for (std::size_t c = 0; c < cols; ++c) {
                const PayoffPair* high = &at(0, c, v);
                for (std::size_t r = 1; r < rows; ++r)
                    if (less(*high, at(r, c, v))) high = &at(r, c, v);
                if (!low || less(*high, *low)) low = high;
            }
            t.minmax.push_back(*low);
        }
    }
    return out;
}

OracleTable oracle_lex_values(const WeightedGame& game, Player which, std::size_t cap) {
    return oracle_lex_values_both(game, cap)[index_of(which)];
}

CycleDecomposition cycle_decomposition(const std::vector<VertexId>& path) {
    CycleDecomposition d;
    for (VertexId v : path) {
        auto it = std::find(d.residual.begin(), d.residual.end(), v);
        if (it == d.residual.end()) {
            d.residual.push_back(v);
            continue;
        }
        d.cycles.emplace_back(it, d.residual.end());
        d.residual.erase(it + 1, d.residual.end());
    }
    return d;
}

namespace {

bool primitive(const std::vector<VertexId>& w, std::size_t begin, std::size_t len) {
    for (std::size_t d = 1; d < len; ++d) {
        if (len % d) continue;
        bool periodic = true;
        for (std::size_t i = d; i < len && periodic; ++i) periodic = w[begin + i] == w[begin + i - d];
        if (periodic) return false;
    }
    return true;
}

} // namespace

void enumerate_lassos(const Arena& arena, VertexId v0, int max_stem, int max_cycle,
                      const std::function<bool(const Lasso&)>& visit) {
    std::size_t limit = static_cast<std::size_t>(max_stem + max_cycle);
    std::vector<VertexId> walk{v0};
    walk.reserve(limit + 2);
    Lasso l;
    bool stop = false;
    // walk[0..L]; a lasso closes when walk[L] == walk[s] with s stem vertices.
    std::function<void()> extend = [&] {
        std::size_t last = walk.size() - 1;
        for (EdgeId e : arena.out(walk[last])) {
            if (stop) return;
            walk.push_back(arena.edge(e).dst);
            std::size_t len = walk.size() - 1;
            for (std::size_t s = len > static_cast<std::size_t>(max_cycle) ? len - max_cycle : 0;
                 s < len && static_cast<int>(s) <= max_stem && !stop; ++s) {
                if (walk[s] != walk[len]) continue;
                if (s > 0 && walk[s - 1] == walk[len - 1]) continue;
                if (!primitive(walk, s, len - s)) continue;
                l.stem.assign(walk.begin(), walk.begin() + s);
                l.cycle.assign(walk.begin() + s, walk.begin() + len);
                if (!visit(l)) stop = true;
            }
            if (walk.size() <= limit) extend();
            walk.pop_back();
        }
    };
    extend();
}

std::vector<Lasso> enumerate_lassos(const Arena& arena, VertexId v0, int max_stem, int max_cycle) {
    std::vector<Lasso> out;
    enumerate_lassos(arena, v0, max_stem, max_cycle, [&](const Lasso& l) {
        out.push_back(l);
        return true;
    });
    return out;
}

WeightedGame random_game(std::mt19937_64& rng, const RandomGameOptions& o) {
    std::uniform_int_distribution<int> size(o.min_vertices, o.max_vertices);
    int n = size(rng);
    WeightedGame g;
    std::bernoulli_distribution coin(0.5);
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v), coin(rng) ? Player::One : Player::Two);
    std::uniform_int_distribution<int> weight(0, o.max_weight);
    for (int v = 0; v < n; ++v) {
        std::uniform_int_distribution<int> degree(1, std::min(o.max_out_degree, n));
        int d = degree(rng);
        std::vector<int> targets(n);
        std::iota(targets.begin(), targets.end(), 0);
        std::shuffle(targets.begin(), targets.end(), rng);
        targets.resize(d);
        std::sort(targets.begin(), targets.end());
        for (int t : targets) {
            int w1 = weight(rng), w2 = weight(rng);
            g.add_edge(v, t, w1, w2);
        }
    }
    g.set_measure(0, o.measure);
    g.set_measure(1, o.measure);
    if (o.measure == Measure::Discounted) g.set_discount(o.discount);
    return g;
}

} // namespace secgame
