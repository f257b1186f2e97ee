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

#include <stdexcept>

namespace secgame {

namespace {

// Values of the positional profile `succ`: x_v = (1-l) w(e_v) + l x_{dst(e_v)}.
std::vector<Rational> evaluate_profile(const Arena& arena, const std::vector<Rational>& weight,
                                       const std::vector<EdgeId>& succ, const Rational& lambda) {
    int n = arena.num_vertices();
    Rational one_minus = Rational(1) - lambda;
    std::vector<std::optional<Rational>> x(n);
    std::vector<int> mark(n, -1);
    for (VertexId start = 0; start < n; ++start) {
        if (x[start]) continue;
        std::vector<VertexId> path;
        VertexId v = start;
        while (!x[v] && mark[v] != start) {
            mark[v] = start;
            path.push_back(v);
            v = arena.edge(succ[v]).dst;
        }
        std::size_t tail_end = path.size();
        if (!x[v]) {
            // v closes a new cycle inside `path`.
            std::size_t pos = 0;
            while (path[pos] != v) ++pos;
            Rational sum, power(1);
            for (std::size_t i = pos; i < path.size(); ++i) {
                sum += power * weight[succ[path[i]]];
                power *= lambda;
            }
            x[v] = one_minus * sum / (Rational(1) - power);
            for (std::size_t i = path.size(); i-- > pos + 1;) {
                VertexId u = path[i];
                x[u] = one_minus * weight[succ[u]] + lambda * *x[arena.edge(succ[u]).dst];
            }
            tail_end = pos;
        }
        for (std::size_t i = tail_end; i-- > 0;) {
            VertexId u = path[i];
            x[u] = one_minus * weight[succ[u]] + lambda * *x[arena.edge(succ[u]).dst];
        }
    }
    std::vector<Rational> out(n);
    for (VertexId v = 0; v < n; ++v) out[v] = *x[v];
    return out;
}

Rational edge_value(const Arena& arena, const std::vector<Rational>& weight, const std::vector<Rational>& x,
                    const Rational& lambda, EdgeId e) {
    return (Rational(1) - lambda) * weight[e] + lambda * x[arena.edge(e).dst];
}

// Switches every vertex of `who` to its best edge when that edge is strictly better.
bool improve(const Arena& arena, const std::vector<Rational>& weight, const std::vector<Rational>& x,
             const Rational& lambda, Player who, bool maximize, std::vector<EdgeId>& succ) {
    bool changed = false;
    for (VertexId v = 0; v < arena.num_vertices(); ++v) {
        if (arena.owner(v) != who) continue;
        EdgeId best = -1;
        Rational best_val;
        for (EdgeId e : arena.out(v)) {
            Rational c = edge_value(arena, weight, x, lambda, e);
            if (best < 0 || (maximize ? c > best_val : c < best_val)) {
                best = e;
                best_val = c;
            }
        }
        if (maximize ? best_val > x[v] : best_val < x[v]) {
            succ[v] = best;
            changed = true;
        }
    }
    return changed;
}

} // namespace

SolveResult1D solve_discounted(const Arena& arena, const std::vector<Rational>& weight, Player maximizer,
                               const Rational& lambda) {
    if (lambda.sign() <= 0 || lambda >= Rational(1)) throw std::invalid_argument("discount factor must lie in (0,1)");
    int n = arena.num_vertices();
    std::vector<EdgeId> succ(n);
    for (VertexId v = 0; v < n; ++v) succ[v] = arena.out(v).front();
    Player minimizer = opponent(maximizer);
    std::vector<Rational> x;
    // Outer loop improves the maximizer; the inner loop computes a best response.
    while (true) {
        do {
            x = evaluate_profile(arena, weight, succ, lambda);
        } while (improve(arena, weight, x, lambda, minimizer, false, succ));
        if (!improve(arena, weight, x, lambda, maximizer, true, succ)) break;
    }
    SolveResult1D res;
    res.value = x;
    res.strat_max = {maximizer, std::vector<EdgeId>(n, -1)};
    res.strat_min = {minimizer, std::vector<EdgeId>(n, -1)};
    for (VertexId v = 0; v < n; ++v) (arena.owner(v) == maximizer ? res.strat_max : res.strat_min).choice[v] = succ[v];
    return res;
}

} // namespace secgame
