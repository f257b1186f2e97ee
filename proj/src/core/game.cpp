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

#include "secgame/game.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace secgame {

namespace {

constexpr std::array<std::pair<Measure, std::string_view>, 7> kMeasureNames{{
    {Measure::Inf, "inf"},
    {Measure::Sup, "sup"},
    {Measure::LimInf, "liminf"},
    {Measure::LimSup, "limsup"},
    {Measure::MeanPayoffInf, "mpinf"},
    {Measure::MeanPayoffSup, "mpsup"},
    {Measure::Discounted, "disc"},
}};

} // namespace

std::string_view measure_name(Measure m) {
    for (auto& [k, n] : kMeasureNames)
        if (k == m) return n;
    return "?";
}

std::optional<Measure> measure_from_name(std::string_view name) {
    for (auto& [k, n] : kMeasureNames)
        if (n == name) return k;
    return std::nullopt;
}

VertexId Arena::add_vertex(Player owner) {
    owner_.push_back(owner);
    out_.emplace_back();
    in_.emplace_back();
    return num_vertices() - 1;
}

EdgeId Arena::add_edge(VertexId src, VertexId dst) {
    if (src < 0 || dst < 0 || src >= num_vertices() || dst >= num_vertices())
        throw std::out_of_range("edge endpoint is not a vertex");
    edges_.push_back({src, dst});
    EdgeId e = num_edges() - 1;
    out_[src].push_back(e);
    in_[dst].push_back(e);
    return e;
}

EdgeId Arena::find_edge(VertexId src, VertexId dst) const {
    for (EdgeId e : out_[src])
        if (edges_[e].dst == dst) return e;
    return -1;
}

VertexId WeightedGame::add_vertex(std::string name, Player owner) {
    if (index_.count(name)) throw std::invalid_argument("duplicate vertex " + name);
    VertexId v = arena_.add_vertex(owner);
    index_.emplace(name, v);
    names_.push_back(std::move(name));
    return v;
}

EdgeId WeightedGame::add_edge(VertexId src, VertexId dst, Rational w1, Rational w2) {
    EdgeId e = arena_.add_edge(src, dst);
    weights_.push_back({std::move(w1), std::move(w2)});
    return e;
}

VertexId WeightedGame::vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    return it == index_.end() ? -1 : it->second;
}

WeightedGame WeightedGame::mirrored() const {
    WeightedGame g;
    for (VertexId v = 0; v < num_vertices(); ++v) g.add_vertex(names_[v], opponent(owner(v)));
    for (EdgeId e = 0; e < num_edges(); ++e)
        g.add_edge(arena_.edge(e).src, arena_.edge(e).dst, weights_[e][1], weights_[e][0]);
    g.measures_ = {measures_[1], measures_[0]};
    g.discount_ = discount_;
    return g;
}

LassoEdges lasso_edges(const Arena& arena, const Lasso& lasso) {
    if (lasso.cycle.empty()) throw std::invalid_argument("lasso cycle is empty");
    auto check = [&](VertexId v) {
        if (v < 0 || v >= arena.num_vertices()) throw std::invalid_argument("lasso vertex out of range");
    };
    for (VertexId v : lasso.stem) check(v);
    for (VertexId v : lasso.cycle) check(v);
    auto link = [&](VertexId u, VertexId v) {
        EdgeId e = arena.find_edge(u, v);
        if (e < 0) throw std::invalid_argument("lasso uses a missing edge");
        return e;
    };
    LassoEdges out;
    out.stem.reserve(lasso.stem.size());
    out.cycle.reserve(lasso.cycle.size());
    for (std::size_t i = 0; i < lasso.stem.size(); ++i) {
        VertexId next = i + 1 < lasso.stem.size() ? lasso.stem[i + 1] : lasso.cycle.front();
        out.stem.push_back(link(lasso.stem[i], next));
    }
    for (std::size_t i = 0; i < lasso.cycle.size(); ++i)
        out.cycle.push_back(link(lasso.cycle[i], lasso.cycle[(i + 1) % lasso.cycle.size()]));
    return out;
}

Lasso positional_outcome(const Arena& arena, const std::vector<EdgeId>& successor_edge, VertexId from) {
    std::vector<int> seen_at(arena.num_vertices(), -1);
    std::vector<VertexId> path;
    VertexId v = from;
    while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(path.size());
        path.push_back(v);
        v = arena.edge(successor_edge[v]).dst;
    }
    Lasso l;
    l.stem.assign(path.begin(), path.begin() + seen_at[v]);
    l.cycle.assign(path.begin() + seen_at[v], path.end());
    return l;
}

std::vector<EdgeId> profile_edges(const Arena& arena, const PositionalStrategy& a, const PositionalStrategy& b) {
    std::vector<EdgeId> succ(arena.num_vertices(), -1);
    for (VertexId v = 0; v < arena.num_vertices(); ++v)
        succ[v] = arena.owner(v) == a.player ? a.choice[v] : b.choice[v];
    return succ;
}

std::strong_ordering lex_compare(const PayoffPair& x, const PayoffPair& y, Player which) {
    int own = index_of(which);
    int other = 1 - own;
    if (auto c = x[own] <=> y[own]; c != 0) return c;
    // The opponent's component is ordered in reverse.
    return y[other] <=> x[other];
}

Rational eval_component(Measure m, const std::vector<Rational>& stem, const std::vector<Rational>& cycle,
                        const std::optional<Rational>& discount) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    switch (m) {
    case Measure::Inf: {
        Rational r = *std::min_element(cycle.begin(), cycle.end());
        for (auto& w : stem) r = std::min(r, w);
        return r;
    }
    case Measure::Sup: {
        Rational r = *std::max_element(cycle.begin(), cycle.end());
        for (auto& w : stem) r = std::max(r, w);
        return r;
    }
    case Measure::LimInf: return *std::min_element(cycle.begin(), cycle.end());
    case Measure::LimSup: return *std::max_element(cycle.begin(), cycle.end());
    case Measure::MeanPayoffInf:
    case Measure::MeanPayoffSup: {
        Rational sum;
        for (auto& w : cycle) sum += w;
        return sum / Rational(static_cast<long>(cycle.size()));
    }
    case Measure::Discounted: {
        if (!discount) throw std::invalid_argument("discounted measure without discount factor");
        const Rational& lambda = *discount;
        Rational head, power(1);
        for (auto& w : stem) {
            head += power * w;
            power *= lambda;
        }
        Rational loop, lp(1);
        for (auto& w : cycle) {
            loop += lp * w;
            lp *= lambda;
        }
        return (Rational(1) - lambda) * (head + power * loop / (Rational(1) - lp));
    }
    }
    throw std::logic_error("unknown measure");
}

namespace {

// Same as eval_component, reading the weights in place.
Rational eval_edges(const WeightedGame& game, int i, const LassoEdges& edges) {
    auto w = [&](EdgeId e) -> const Rational& { return game.weight(e, i); };
    auto extremum = [&](bool with_stem, bool want_max) {
        const Rational* r = &w(edges.cycle.front());
        auto visit = [&](EdgeId e) {
            if (want_max ? w(e) > *r : w(e) < *r) r = &w(e);
        };
        for (EdgeId e : edges.cycle) visit(e);
        if (with_stem)
            for (EdgeId e : edges.stem) visit(e);
        return *r;
    };
    switch (game.measure(i)) {
    case Measure::Inf: return extremum(true, false);
    case Measure::Sup: return extremum(true, true);
    case Measure::LimInf: return extremum(false, false);
    case Measure::LimSup: return extremum(false, true);
    case Measure::MeanPayoffInf:
    case Measure::MeanPayoffSup: {
        long len = static_cast<long>(edges.cycle.size());
        __int128 small = 0;
        bool integral = true;
        for (EdgeId e : edges.cycle) {
            const mpq_class& q = w(e).raw();
            if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
                integral = false;
                break;
            }
            small += q.get_num().get_si();
        }
        if (integral && small >= INT64_MIN && small <= INT64_MAX)
            return Rational(static_cast<long>(small), len);
        Rational sum;
        for (EdgeId e : edges.cycle) sum += w(e);
        return sum / Rational(len);
    }
    case Measure::Discounted: {
        std::vector<Rational> stem, cycle;
        for (EdgeId e : edges.stem) stem.push_back(w(e));
        for (EdgeId e : edges.cycle) cycle.push_back(w(e));
        return eval_component(Measure::Discounted, stem, cycle, game.discount());
    }
    }
    throw std::logic_error("unknown measure");
}

} // namespace

PayoffPair eval_lasso_payoff(const WeightedGame& game, const Lasso& lasso) {
    LassoEdges edges = lasso_edges(game.arena(), lasso);
    return {eval_edges(game, 0, edges), eval_edges(game, 1, edges)};
}

std::pair<WeightedGame, NormalizationInfo> normalize_weights(const WeightedGame& game) {
    mpz_class b = 1, a = 0;
    for (EdgeId e = 0; e < game.num_edges(); ++e)
        for (int i = 0; i < 2; ++i) {
            b = lcm(b, game.weight(e, i).den());
            if (game.weight(e, i).num() < a) a = game.weight(e, i).num();
        }
    NormalizationInfo info{Rational(a), Rational(b), 0, 0, 0};
    WeightedGame out = game;
    for (EdgeId e = 0; e < game.num_edges(); ++e)
        for (int i = 0; i < 2; ++i) {
            Rational w = game.weight(e, i) * info.b_star - info.a_star * info.b_star;
            Rational& mx = i == 0 ? info.max_weight1 : info.max_weight2;
            mx = std::max(mx, w);
            out.set_weight(e, i, std::move(w));
        }
    info.max_weight = std::max(info.max_weight1, info.max_weight2);
    return {std::move(out), std::move(info)};
}

Rational denormalize(const Rational& v, const NormalizationInfo& info) { return v / info.b_star + info.a_star; }

PayoffPair denormalize_value(const PayoffPair& v, const NormalizationInfo& info, Measure) {
    // Every measure commutes with positive affine maps of the weights.
    return {denormalize(v.p1, info), denormalize(v.p2, info)};
}

std::vector<Violation> validate_game(const WeightedGame& game) {
    std::vector<Violation> out;
    const Arena& a = game.arena();
    for (VertexId v = 0; v < a.num_vertices(); ++v)
        if (a.out(v).empty())
            out.push_back({Violation::Kind::Deadlock, "deadlock: vertex " + game.name(v) + " has no outgoing edge"});
    for (EdgeId e = 0; e < a.num_edges(); ++e) {
        const Edge& ed = a.edge(e);
        if (ed.src < 0 || ed.dst < 0 || ed.src >= a.num_vertices() || ed.dst >= a.num_vertices()) {
            out.push_back({Violation::Kind::DanglingEdge, "dangling edge #" + std::to_string(e)});
            continue;
        }
        if (a.find_edge(ed.src, ed.dst) != e)
            out.push_back({Violation::Kind::DuplicateEdge,
                           "duplicate edge " + game.name(ed.src) + " -> " + game.name(ed.dst)});
    }
    bool discounted = game.measure(0) == Measure::Discounted || game.measure(1) == Measure::Discounted;
    if (discounted && !game.discount())
        out.push_back({Violation::Kind::MissingDiscount, "missing discount: a discounted measure needs a discount factor"});
    if (game.discount() && (game.discount()->sign() <= 0 || *game.discount() >= Rational(1)))
        out.push_back({Violation::Kind::DiscountOutOfRange,
                       "discount out of range: " + game.discount()->str() + " is not in (0,1)"});
    return out;
}

} // namespace secgame
