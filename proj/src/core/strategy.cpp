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

#include "secgame/strategy.hpp"

#include <map>
#include <stdexcept>

namespace secgame {

MealyStrategy MealyStrategy::from_positional(const Arena& arena, const PositionalStrategy& s) {
    MealyStrategy m;
    m.player = s.player;
    m.num_vertices = arena.num_vertices();
    m.num_states = 1;
    m.labels = {"positional"};
    m.update.assign(m.num_vertices, 0);
    m.choose.assign(m.num_vertices, -1);
    for (VertexId v = 0; v < arena.num_vertices(); ++v)
        if (arena.owner(v) == s.player) m.choose[v] = s.choice[v];
    return m;
}

void check_machine(const Arena& arena, const MealyStrategy& m) {
    int n = arena.num_vertices();
    if (m.num_vertices != n) throw std::invalid_argument("machine vertex count differs from the game");
    if (m.num_states < 1 || m.initial < 0 || m.initial >= m.num_states)
        throw std::invalid_argument("machine has no valid initial state");
    std::size_t cells = static_cast<std::size_t>(m.num_states) * n;
    if (m.update.size() != cells || m.choose.size() != cells)
        throw std::invalid_argument("machine tables have the wrong size");
    for (int s = 0; s < m.num_states; ++s)
        for (VertexId v = 0; v < n; ++v) {
            int t = m.next_state(s, v);
            if (t < 0 || t >= m.num_states) throw std::invalid_argument("update leads outside the state set");
            EdgeId e = m.choice(s, v);
            if (arena.owner(v) == m.player) {
                if (e < 0 || e >= arena.num_edges() || arena.edge(e).src != v)
                    throw std::invalid_argument("choice is not an out-edge of its vertex");
            }
        }
}

int reachable_states(const Arena& arena, const MealyStrategy& m, VertexId v0) {
    int n = arena.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(m.num_states) * n, 0);
    std::vector<char> state_seen(m.num_states, 0);
    state_seen[m.initial] = 1;
    std::vector<std::pair<int, VertexId>> stack;
    auto push = [&](int s, VertexId v) {
        std::size_t k = static_cast<std::size_t>(s) * n + v;
        if (!seen[k]) {
            seen[k] = 1;
            state_seen[s] = 1;
            stack.emplace_back(s, v);
        }
    };
    push(m.next_state(m.initial, v0), v0);
    while (!stack.empty()) {
        auto [s, v] = stack.back();
        stack.pop_back();
        if (arena.owner(v) == m.player) {
            VertexId u = arena.edge(m.choice(s, v)).dst;
            push(m.next_state(s, u), u);
        } else {
            for (EdgeId e : arena.out(v)) {
                VertexId u = arena.edge(e).dst;
                push(m.next_state(s, u), u);
            }
        }
    }
    int count = 0;
    for (char c : state_seen) count += c;
    return count;
}

Lasso outcome_against_positional(const Arena& arena, const MealyStrategy& m, const PositionalStrategy& other,
                                 VertexId v0) {
    std::map<std::pair<VertexId, int>, int> seen;
    std::vector<VertexId> path;
    VertexId v = v0;
    int s = m.next_state(m.initial, v0);
    while (!seen.count({v, s})) {
        seen[{v, s}] = static_cast<int>(path.size());
        path.push_back(v);
        EdgeId e = arena.owner(v) == m.player ? m.choice(s, v) : other.choice[v];
        v = arena.edge(e).dst;
        s = m.next_state(s, v);
    }
    int k = seen[{v, s}];
    Lasso l;
    l.stem.assign(path.begin(), path.begin() + k);
    l.cycle.assign(path.begin() + k, path.end());
    return l;
}

} // namespace secgame
