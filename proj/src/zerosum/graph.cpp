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

std::vector<std::vector<VertexId>> strongly_connected_components(const Arena& arena, const VertexSet* alive,
                                                                 const EdgeMask* enabled) {
    int n = arena.num_vertices();
    auto live = [&](VertexId v) { return !alive || (*alive)[v]; };
    auto usable = [&](EdgeId e) { return (!enabled || (*enabled)[e]) && live(arena.edge(e).dst); };
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    std::vector<std::pair<VertexId, std::size_t>> calls;
    std::vector<std::vector<VertexId>> out;
    int counter = 0;
    for (VertexId root = 0; root < n; ++root) {
        if (!live(root) || index[root] >= 0) continue;
        calls.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!calls.empty()) {
            auto& [v, pos] = calls.back();
            const auto& outs = arena.out(v);
            if (pos < outs.size()) {
                EdgeId e = outs[pos++];
                if (!usable(e)) continue;
                VertexId w = arena.edge(e).dst;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    calls.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            VertexId done = v;
            calls.pop_back();
            if (!calls.empty()) low[calls.back().first] = std::min(low[calls.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

RestrictedArena restrict_edges(const Arena& arena, const EdgeMask& enabled) {
    RestrictedArena r;
    for (VertexId v = 0; v < arena.num_vertices(); ++v) r.arena.add_vertex(arena.owner(v));
    for (EdgeId e = 0; e < arena.num_edges(); ++e)
        if (enabled[e]) {
            r.arena.add_edge(arena.edge(e).src, arena.edge(e).dst);
            r.edge_origin.push_back(e);
        }
    return r;
}

PositionalStrategy edge_dichotomy(const Arena& arena, Player player,
                                  const std::function<bool(const EdgeMask&)>& preserves) {
    EdgeMask mask(arena.num_edges(), 1);
    PositionalStrategy s{player, std::vector<EdgeId>(arena.num_vertices(), -1)};
    for (VertexId v = 0; v < arena.num_vertices(); ++v) {
        if (arena.owner(v) != player) continue;
        std::vector<EdgeId> live = arena.out(v);
        while (live.size() > 1) {
            std::size_t cut = (live.size() + 1) / 2;
            std::vector<EdgeId> removed(live.begin(), live.begin() + cut);
            std::vector<EdgeId> kept(live.begin() + cut, live.end());
            for (EdgeId e : removed) mask[e] = 0;
            if (preserves(mask)) {
                live = kept;
            } else {
                // Every uniform optimal strategy needs one of the removed edges.
                for (EdgeId e : removed) mask[e] = 1;
                for (EdgeId e : kept) mask[e] = 0;
                live = removed;
            }
        }
        s.choice[v] = live.front();
    }
    return s;
}

namespace {

// Shortest path (vertex list, excluding `to`) from `from` to `to` using at least
// one edge, inside `region`. Empty when none exists.
std::vector<VertexId> bfs_path(const Arena& g, VertexId from, VertexId to, const VertexSet& region, bool nonempty) {
    int n = g.num_vertices();
    if (!nonempty && from == to) return {};
    std::vector<VertexId> parent(n, -2);
    std::deque<VertexId> queue;
    for (EdgeId e : g.out(from)) {
        VertexId w = g.edge(e).dst;
        if (!region[w] || parent[w] != -2) continue;
        parent[w] = from;
        queue.push_back(w);
    }
    while (!queue.empty() && parent[to] == -2) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeId e : g.out(u)) {
            VertexId w = g.edge(e).dst;
            if (!region[w] || parent[w] != -2) continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    if (parent[to] == -2) return {};
    std::vector<VertexId> rev;
    VertexId x = parent[to];
    rev.push_back(x);
    while (x != from) {
        x = parent[x];
        rev.push_back(x);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

} // namespace

std::optional<Lasso> find_rabin2_path(const Arena& graph, const VertexSet& a1, const VertexSet& b1,
                                      const VertexSet& a2, const VertexSet& b2, VertexId from) {
    int n = graph.num_vertices();
    VertexSet reach(n, 0);
    std::deque<VertexId> queue{from};
    reach[from] = 1;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeId e : graph.out(u)) {
            VertexId w = graph.edge(e).dst;
            if (!reach[w]) {
                reach[w] = 1;
                queue.push_back(w);
            }
        }
    }
    // The periodic part avoids both A-sets entirely.
    VertexSet alive(n, 0);
    for (VertexId v = 0; v < n; ++v) alive[v] = reach[v] && !a1[v] && !a2[v];
    for (const auto& comp : strongly_connected_components(graph, &alive)) {
        VertexSet in_comp(n, 0);
        for (VertexId v : comp) in_comp[v] = 1;
        bool cyclic = comp.size() > 1;
        if (!cyclic)
            for (EdgeId e : graph.out(comp[0]))
                if (graph.edge(e).dst == comp[0]) cyclic = true;
        if (!cyclic) continue;
        auto hit1 = std::find_if(comp.begin(), comp.end(), [&](VertexId v) { return b1[v]; });
        auto hit2 = std::find_if(comp.begin(), comp.end(), [&](VertexId v) { return b2[v]; });
        if (hit1 == comp.end() || hit2 == comp.end()) continue;
        VertexId x = *hit1, y = *hit2;
        Lasso l;
        l.stem = bfs_path(graph, from, x, reach, false);
        std::vector<VertexId> there = bfs_path(graph, x, y, in_comp, false);
        std::vector<VertexId> back = bfs_path(graph, y, x, in_comp, there.empty());
        l.cycle = there;
        l.cycle.insert(l.cycle.end(), back.begin(), back.end());
        return l;
    }
    return std::nullopt;
}

} // namespace secgame
