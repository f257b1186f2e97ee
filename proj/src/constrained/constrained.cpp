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

#include "secgame/constrained.hpp"

#include <deque>
#include <set>

#include "secgame/equilibrium.hpp"
#include "secgame/lex.hpp"
#include "secgame/lp.hpp"

namespace secgame {

void Interval::raise(const ExtRational& x, bool strict) {
    if (x > lo) {
        lo = x;
        lo_strict = strict;
    } else if (x == lo) {
        lo_strict = lo_strict || strict;
    }
}

void Interval::lower(const ExtRational& x, bool strict) {
    if (x < hi) {
        hi = x;
        hi_strict = strict;
    } else if (x == hi) {
        hi_strict = hi_strict || strict;
    }
}

bool Interval::empty() const {
    if (lo.tag() == ExtRational::Tag::PosInf || hi.tag() == ExtRational::Tag::NegInf) return true;
    if (lo > hi) return true;
    return lo == hi && (lo_strict || hi_strict);
}

bool Interval::contains(const Rational& x) const {
    auto l = compare(lo, x), h = compare(hi, x);
    bool above = lo_strict ? l < 0 : l <= 0;
    bool below = hi_strict ? h > 0 : h >= 0;
    return above && below;
}

namespace {

VertexSet reachable_within(const Arena& a, const VertexSet& alive, VertexId from) {
    VertexSet seen(a.num_vertices(), 0);
    std::deque<VertexId> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (EdgeId e : a.out(u)) {
            VertexId w = a.edge(e).dst;
            if (alive[w] && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

// Adds coefficient rows for "payoff component lies in the interval" where the
// component is the linear form `form`.
void add_interval(LinearSystem& sys, const std::vector<Rational>& form, const Interval& iv) {
    if (iv.lo.finite()) {
        if (iv.lo_strict) sys.add_strict(form, iv.lo.value());
        else sys.add_nonstrict(form, iv.lo.value());
    }
    if (iv.hi.finite()) {
        std::vector<Rational> neg(form.size());
        for (std::size_t j = 0; j < form.size(); ++j) neg[j] = -form[j];
        if (iv.hi_strict) sys.add_strict(neg, -iv.hi.value());
        else sys.add_nonstrict(neg, -iv.hi.value());
    }
}

// Two cycle flows x and y inside one strongly connected part. For MPInf the
// payoff is (F1(x), F2(y)) with F2(x) >= F2(y) and F1(y) >= F1(x); MPSup flips
// both side conditions.
bool component_admits(const WeightedGame& game, const std::vector<VertexId>& comp, const VertexSet& in_comp,
                      const BoxConstraints& box, bool sup) {
    const Arena& a = game.arena();
    std::vector<EdgeId> edges;
    for (VertexId v : comp)
        for (EdgeId e : a.out(v))
            if (in_comp[a.edge(e).dst]) edges.push_back(e);
    if (edges.empty()) return false;
    int k = static_cast<int>(edges.size());
    LinearSystem sys;
    sys.num_vars = 2 * k;
    auto zero = [&] { return std::vector<Rational>(2 * k, Rational(0)); };
    for (int copy = 0; copy < 2; ++copy) {
        int off = copy * k;
        for (int j = 0; j < k; ++j) {
            auto row = zero();
            row[off + j] = 1;
            sys.add_nonstrict(row, 0);
        }
        auto total = zero();
        for (int j = 0; j < k; ++j) total[off + j] = 1;
        sys.add_equal(total, 1);
        for (VertexId v : comp) {
            auto row = zero();
            for (int j = 0; j < k; ++j) {
                const Edge& e = a.edge(edges[j]);
                if (e.dst == v) row[off + j] += 1;
                if (e.src == v) row[off + j] -= 1;
            }
            sys.add_equal(row, 0);
        }
    }
    auto form = [&](int copy, int c) {
        auto row = zero();
        for (int j = 0; j < k; ++j) row[copy * k + j] = game.weight(edges[j], c);
        return row;
    };
    auto diff = [&](std::vector<Rational> p, const std::vector<Rational>& q) {
        for (std::size_t j = 0; j < p.size(); ++j) p[j] -= q[j];
        return p;
    };
    if (!sup) {
        sys.add_nonstrict(diff(form(0, 1), form(1, 1)), 0);
        sys.add_nonstrict(diff(form(1, 0), form(0, 0)), 0);
    } else {
        sys.add_nonstrict(diff(form(1, 1), form(0, 1)), 0);
        sys.add_nonstrict(diff(form(0, 0), form(1, 0)), 0);
    }
    add_interval(sys, form(0, 0), box[0]);
    add_interval(sys, form(1, 1), box[1]);
    return lp_feasible(sys).feasible;
}

// The four ways the two lexicographic conditions can hold, intersected with the box.
std::vector<BoxConstraints> expand_cases(const PayoffPair& own1, const PayoffPair& own2, const ThresholdBox& box) {
    BoxConstraints base;
    for (int c = 0; c < 2; ++c) {
        base[c].raise(box.mu[c], false);
        base[c].lower(box.nu[c], false);
    }
    std::vector<BoxConstraints> out;
    for (int first_tied = 0; first_tied < 2; ++first_tied)
        for (int second_tied = 0; second_tied < 2; ++second_tied) {
            BoxConstraints b = base;
            // Player 1: payoff1 > a1, or payoff1 = a1 and payoff2 <= a2.
            if (!first_tied) {
                b[0].raise(own1.p1, true);
            } else {
                b[0].raise(own1.p1, false);
                b[0].lower(own1.p1, false);
                b[1].lower(own1.p2, false);
            }
            // Player 2: payoff2 > b2, or payoff2 = b2 and payoff1 <= b1.
            if (!second_tied) {
                b[1].raise(own2.p2, true);
            } else {
                b[1].raise(own2.p2, false);
                b[1].lower(own2.p2, false);
                b[0].lower(own2.p1, false);
            }
            if (!b[0].empty() && !b[1].empty()) out.push_back(b);
        }
    return out;
}

bool decide_on(const WeightedGame& game, VertexId v0, const ThresholdBox& box, const LexTables& tables) {
    Measure m = game.measure(0);
    std::set<std::pair<Rational, Rational>> vals1, vals2;
    for (const auto& p : tables.t1.value) vals1.insert({p.p1, p.p2});
    for (const auto& p : tables.t2.value) vals2.insert({p.p1, p.p2});
    int n = game.num_vertices();
    for (const auto& [x1, x2] : vals1)
        for (const auto& [y1, y2] : vals2) {
            PayoffPair own1{x1, x2}, own2{y1, y2};
            VertexSet alive(n);
            for (VertexId v = 0; v < n; ++v)
                alive[v] = lex_leq(tables.t1.value[v], own1, Player::One) &&
                           lex_leq(tables.t2.value[v], own2, Player::Two);
            if (!alive[v0]) continue;
            for (const BoxConstraints& b : expand_cases(own1, own2, box)) {
                bool ok = m == Measure::MeanPayoffInf || m == Measure::MeanPayoffSup
                              ? path_in_box_mp(game, alive, v0, b)
                              : path_in_box_liminf(game, alive, v0, b);
                if (ok) return true;
            }
        }
    return false;
}

} // namespace

bool path_in_box_mp(const WeightedGame& game, const VertexSet& alive, VertexId from, const BoxConstraints& box) {
    if (!alive[from] || box[0].empty() || box[1].empty()) return false;
    bool sup = game.measure(0) == Measure::MeanPayoffSup;
    const Arena& a = game.arena();
    VertexSet reach = reachable_within(a, alive, from);
    for (const auto& comp : strongly_connected_components(a, &reach)) {
        VertexSet in_comp(a.num_vertices(), 0);
        for (VertexId v : comp) in_comp[v] = 1;
        if (component_admits(game, comp, in_comp, box, sup)) return true;
    }
    return false;
}

bool path_in_box_liminf(const WeightedGame& game, const VertexSet& alive, VertexId from, const BoxConstraints& box) {
    if (!alive[from] || box[0].empty() || box[1].empty()) return false;
    bool sup = game.measure(0) == Measure::LimSup;
    const Arena& a = game.arena();
    // Split graph over alive vertices: original vertex v keeps id v, edge e becomes n + e.
    int n = a.num_vertices();
    Arena g;
    for (VertexId v = 0; v < n + a.num_edges(); ++v) g.add_vertex(Player::One);
    std::array<VertexSet, 2> fin, inf;
    for (int c = 0; c < 2; ++c) {
        fin[c].assign(g.num_vertices(), 0);
        inf[c].assign(g.num_vertices(), 0);
    }
    for (EdgeId e = 0; e < a.num_edges(); ++e) {
        const Edge& ed = a.edge(e);
        if (!alive[ed.src] || !alive[ed.dst]) continue;
        g.add_edge(ed.src, n + e);
        g.add_edge(n + e, ed.dst);
        for (int c = 0; c < 2; ++c) {
            const Rational& w = game.weight(e, c);
            const Interval& iv = box[c];
            auto l = compare(iv.lo, w), h = compare(iv.hi, w);
            bool above = iv.lo_strict ? l < 0 : l <= 0;
            bool below = iv.hi_strict ? h > 0 : h >= 0;
            // LimInf: eventually every weight is above lo, infinitely often one is below hi.
            // LimSup: eventually every weight is below hi, infinitely often one is above lo.
            fin[c][n + e] = sup ? !below : !above;
            inf[c][n + e] = sup ? above : below;
        }
    }
    return find_rabin2_path(g, fin[0], inf[0], fin[1], inf[1], from).has_value();
}

bool decide_constrained_existence(const WeightedGame& game, VertexId v0, const ThresholdBox& box) {
    if (!game.uniform_measure())
        throw UnsupportedError("unsupported measure combination: constrained existence needs both measures equal");
    if (game.measure(0) == Measure::Discounted)
        throw UnsupportedError("unsupported: open problem (discounted constrained existence)");
    if (!needs_augmentation(game)) return decide_on(game, v0, box, solve_both(game));
    AugmentedTables at = solve_augmented(game, v0);
    return decide_on(at.aug.game, at.aug.root[v0], box, at.tables);
}

} // namespace secgame
