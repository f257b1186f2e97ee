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

#include "secgame/zerosum.hpp"

#include <algorithm>
#include <deque>

namespace secgame {

AttractorResult attractor(const Arena& arena, Player player, const VertexSet& target, const VertexSet* within) {
    int n = arena.num_vertices();
    auto inside = [&](VertexId v) { return !within || (*within)[v]; };
    AttractorResult res{VertexSet(n, 0), std::vector<EdgeId>(n, -1)};
    std::vector<int> remaining(n, 0);
    std::deque<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        if (!inside(v)) continue;
        for (EdgeId e : arena.out(v))
            if (inside(arena.edge(e).dst)) ++remaining[v];
        if (target[v]) {
            res.region[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeId e : arena.in(u)) {
            VertexId v = arena.edge(e).src;
            if (!inside(v) || res.region[v]) continue;
            if (arena.owner(v) == player) {
                res.region[v] = 1;
                res.strategy[v] = e;
                queue.push_back(v);
            } else if (--remaining[v] == 0) {
                res.region[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return res;
}

namespace {

class Zielonka {
public:
    explicit Zielonka(const PriorityGame& g) : g_(g), a_(*g.arena) {
        int n = a_.num_vertices();
        result_.winner.assign(n, g.even);
        result_.strategy[0].assign(n, -1);
        result_.strategy[1].assign(n, -1);
    }

    ParityResult run() {
        VertexSet all(a_.num_vertices(), 1);
        solve(all);
        for (VertexId v = 0; v < a_.num_vertices(); ++v)
            result_.strategy[1 - index_of(result_.winner[v])][v] = -1;
        return std::move(result_);
    }

private:
    Player winner_of(int priority) const { return priority % 2 == 0 ? g_.even : opponent(g_.even); }

    // Some successor inside `mask`, lowest edge index.
    EdgeId stay_edge(VertexId v, const VertexSet& mask) const {
        for (EdgeId e : a_.out(v))
            if (mask[a_.edge(e).dst]) return e;
        return -1;
    }

    void assign(const VertexSet& region, Player p, const std::vector<EdgeId>& strat) {
        auto& out = result_.strategy[index_of(p)];
        for (VertexId v = 0; v < a_.num_vertices(); ++v)
            if (region[v]) {
                result_.winner[v] = p;
                if (a_.owner(v) == p && strat[v] >= 0) out[v] = strat[v];
            }
    }

    // Solves the subgame on `mask` and writes winners and strategies for its vertices.
    void solve(const VertexSet& mask) {
        int n = a_.num_vertices();
        int top = -1;
        for (VertexId v = 0; v < n; ++v)
            if (mask[v]) top = std::max(top, g_.priority[v]);
        if (top < 0) return;
        Player p = winner_of(top);
        Player o = opponent(p);
        VertexSet u(n, 0);
        for (VertexId v = 0; v < n; ++v) u[v] = mask[v] && g_.priority[v] == top;
        AttractorResult attr = attractor(a_, p, u, &mask);

        VertexSet rest(n, 0);
        for (VertexId v = 0; v < n; ++v) rest[v] = mask[v] && !attr.region[v];
        solve(rest);

        bool opponent_wins_somewhere = false;
        for (VertexId v = 0; v < n; ++v)
            if (rest[v] && result_.winner[v] == o) opponent_wins_somewhere = true;

        if (!opponent_wins_somewhere) {
            // p wins the whole subgame: keep sub-strategies, attract into u, stay inside from u.
            std::vector<EdgeId> strat(n, -1);
            for (VertexId v = 0; v < n; ++v) {
                if (!mask[v] || a_.owner(v) != p) continue;
                if (rest[v]) strat[v] = result_.strategy[index_of(p)][v];
                else if (u[v]) strat[v] = stay_edge(v, mask);
                else strat[v] = attr.strategy[v];
            }
            assign(mask, p, strat);
            return;
        }

        VertexSet wo(n, 0);
        for (VertexId v = 0; v < n; ++v) wo[v] = rest[v] && result_.winner[v] == o;
        std::vector<EdgeId> wo_strat = result_.strategy[index_of(o)];
        AttractorResult battr = attractor(a_, o, wo, &mask);
        VertexSet rest2(n, 0);
        for (VertexId v = 0; v < n; ++v) rest2[v] = mask[v] && !battr.region[v];
        solve(rest2);
        std::vector<EdgeId> strat(n, -1);
        for (VertexId v = 0; v < n; ++v) {
            if (!battr.region[v] || a_.owner(v) != o) continue;
            strat[v] = wo[v] ? wo_strat[v] : battr.strategy[v];
        }
        assign(battr.region, o, strat);
    }

    const PriorityGame& g_;
    const Arena& a_;
    ParityResult result_;
};

} // namespace

ParityResult solve_parity(const PriorityGame& game) { return Zielonka(game).run(); }

} // namespace secgame
