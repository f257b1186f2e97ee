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

#include "doctest.h"
#include "helpers.hpp"
#include "secgame/lex.hpp"
#include "secgame/oracle.hpp"

using namespace secgame;
using testing::pp;

namespace {

PayoffPair profile_payoff(const WeightedGame& g, const PositionalStrategy& a, const PositionalStrategy& b, VertexId v) {
    return eval_lasso_payoff(g, positional_outcome(g.arena(), profile_edges(g.arena(), a, b), v));
}

// Protagonist strategy guarantees at least the value, antagonist at most, against every positional reply.
void check_guarantees(const WeightedGame& g, const LexValueTable& t) {
    Player w = t.which;
    auto replies_to_pro = enumerate_positional(g.arena(), opponent(w));
    auto replies_to_ant = enumerate_positional(g.arena(), w);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& pro = t.strategy_of(w, v);
        const auto& ant = t.strategy_of(opponent(w), v);
        for (const auto& y : replies_to_pro) CHECK(lex_leq(t.value[v], profile_payoff(g, pro, y, v), w));
        for (const auto& x : replies_to_ant) CHECK(lex_leq(profile_payoff(g, x, ant, v), t.value[v], w));
    }
}

WeightedGame constant_game(Measure m, int c, int d) {
    WeightedGame g;
    g.add_vertex("a", Player::One);
    g.add_vertex("b", Player::Two);
    g.add_vertex("c", Player::One);
    for (auto [s, t] : {std::pair{0, 1}, {1, 0}, {1, 2}, {2, 2}, {2, 0}}) g.add_edge(s, t, c, d);
    return testing::with_measure(g, m, Rational(1, 2));
}

} // namespace

TEST_CASE("first fixture, mean payoff") {
    WeightedGame g1 = testing::load_fixture("g1.game");
    LexValueTable t = solve_lex(g1, Player::One);
    std::vector<PayoffPair> expected{pp(4, 4), pp(4, 4), pp(3, 2), pp(4, 3), pp(3, 2)};
    CHECK(t.value == expected);
    CHECK(t.uniform);
    CHECK(g1.arena().edge(t.strategy_of(Player::One, 0).choice[g1.vertex("v0")]).dst == g1.vertex("v1"));
    CHECK(g1.arena().edge(t.strategy_of(Player::Two, 0).choice[g1.vertex("v2")]).dst == g1.vertex("v4"));
    check_guarantees(g1, t);
    CHECK(solve_lex(g1, Player::Two).value[0] == pp(4, 3));
}

TEST_CASE("first fixture under limit measures matches the mean-payoff table") {
    WeightedGame g1 = testing::load_fixture("g1.game");
    auto mp = solve_lex(g1, Player::One).value;
    for (Measure m : {Measure::LimInf, Measure::LimSup, Measure::MeanPayoffSup}) {
        CHECK(solve_lex(testing::with_measure(g1, m), Player::One).value == mp);
        CHECK(oracle_lex_values(testing::with_measure(g1, m), Player::One).maxmin == mp);
    }
}

TEST_CASE("first fixture, discounted with 1/2") {
    WeightedGame g = testing::load_fixture("g1_disc.game");
    LexValueTable t = solve_lex(g, Player::One);
    CHECK(t.value[g.vertex("v0")] == pp(2, 2));
    CHECK(t.value[g.vertex("v1")] == pp(4, 4));
    CHECK(t.value[g.vertex("v2")] == PayoffPair{Rational(3, 2), 1});
    CHECK(t.value[g.vertex("v3")] == pp(4, 3));
    CHECK(t.value[g.vertex("v4")] == pp(3, 2));
    CHECK(t.value == oracle_lex_values(g, Player::One).maxmin);
    check_guarantees(g, t);
}

TEST_CASE("constant weights give constant values") {
    for (Measure m : testing::all_measures())
        for (Player w : {Player::One, Player::Two}) {
            CAPTURE(measure_name(m));
            for (const auto& v : solve_lex(constant_game(m, 3, 1), w).value) CHECK(v == pp(3, 1));
        }
    WeightedGame zero = testing::with_measure(testing::load_fixture("g1.game"), Measure::Discounted, Rational(1, 3));
    for (EdgeId e = 0; e < zero.num_edges(); ++e) {
        zero.set_weight(e, 0, 0);
        zero.set_weight(e, 1, 0);
    }
    for (const auto& v : solve_lex(zero, Player::One).value) CHECK(v == pp(0, 0));
}

TEST_CASE("limit threshold trivial cases") {
    std::mt19937_64 rng(41);
    for (Measure m : {Measure::LimInf, Measure::LimSup})
        for (int i = 0; i < 100; ++i) {
            RandomGameOptions o;
            o.measure = m;
            WeightedGame g = random_game(rng, o);
            for (VertexId v = 0; v < g.num_vertices(); ++v) {
                CHECK(solve_lex_liminf_threshold(g, v, pp(0, 2), Player::One));
                CHECK_FALSE(solve_lex_liminf_threshold(g, v, pp(3, 0), Player::One));
                CHECK(solve_lex_liminf_threshold(g, v, pp(2, 0), Player::Two));
            }
        }
}

TEST_CASE("limit thresholds agree with the oracle on every candidate pair") {
    std::mt19937_64 rng(42);
    for (Measure m : {Measure::LimInf, Measure::LimSup})
        for (int i = 0; i < 100; ++i) {
            RandomGameOptions o;
            o.measure = m;
            o.max_vertices = 6;
            WeightedGame g = random_game(rng, o);
            auto tables = oracle_lex_values_both(g);
            for (Player w : {Player::One, Player::Two})
                for (VertexId v = 0; v < g.num_vertices(); ++v)
                    for (EdgeId a = 0; a < g.num_edges(); ++a)
                        for (EdgeId b = 0; b < g.num_edges(); ++b) {
                            PayoffPair c{g.weight(a, 0), g.weight(b, 1)};
                            bool expect = lex_leq(c, tables[index_of(w)].maxmin[v], w);
                            CHECK(solve_lex_liminf_threshold(g, v, c, w) == expect);
                        }
        }
}

TEST_CASE("both strategy extractions for limit games are optimal") {
    std::mt19937_64 rng(43);
    for (Measure m : {Measure::LimInf, Measure::LimSup})
        for (int i = 0; i < 100; ++i) {
            RandomGameOptions o;
            o.measure = m;
            WeightedGame g = random_game(rng, o);
            for (Player w : {Player::One, Player::Two}) {
                auto a = solve_lex_liminf(g, w, StrategyExtraction::CombineThresholds);
                auto b = solve_lex_liminf(g, w, StrategyExtraction::EdgeDichotomy);
                CHECK(a.value == b.value);
                check_guarantees(g, a);
                check_guarantees(g, b);
            }
        }
}

TEST_CASE("Inf fixture: values, partitions and non-uniformity") {
    WeightedGame g3 = testing::load_fixture("g3.game");
    VertexId v0 = g3.vertex("v0"), v2 = g3.vertex("v2"), v3 = g3.vertex("v3"), v4 = g3.vertex("v4");
    LexValueTable t = solve_lex(g3, Player::One);
    CHECK(t.value[v0] == pp(2, 0));
    CHECK(t.value[v2] == pp(2, 0));
    CHECK(t.value[v3] == pp(2, 0));
    CHECK(t.value[v4] == pp(3, 1));
    CHECK_FALSE(t.uniform);
    check_guarantees(g3, t);

    auto all = inf_partition(g3, pp(2, 0));
    for (VertexId v = 0; v < g3.num_vertices(); ++v) CHECK(all.win1[v]);
    auto high = inf_partition(g3, pp(3, 1));
    for (VertexId v = 0; v < g3.num_vertices(); ++v) {
        CHECK(bool(high.win1[v]) == (v == v4));
        CHECK(bool(high.win2[v]) != bool(high.win1[v]));
    }
    auto weakest = inf_partition(g3, pp(0, 1));
    for (VertexId v = 0; v < g3.num_vertices(); ++v) CHECK(weakest.win1[v]);

    // No positional player-1 strategy is optimal from both v0 and v4.
    auto mine = enumerate_positional(g3.arena(), Player::One);
    auto theirs = enumerate_positional(g3.arena(), Player::Two);
    // v4 is player 1's only choice; with player 2's choice at v2 that makes 4 profiles.
    CHECK(mine.size() == 2);
    CHECK(mine.size() * theirs.size() == 4);
    int optimal_from_both = 0;
    for (const auto& x : mine) {
        bool ok = true;
        for (VertexId v : {v0, v4})
            for (const auto& y : theirs) ok = ok && lex_leq(t.value[v], profile_payoff(g3, x, y, v), Player::One);
        optimal_from_both += ok;
    }
    CHECK(optimal_from_both == 0);
}

TEST_CASE("Inf and Sup partitions split the vertices") {
    std::mt19937_64 rng(44);
    for (Measure m : {Measure::Inf, Measure::Sup})
        for (int i = 0; i < 200; ++i) {
            RandomGameOptions o;
            o.measure = m;
            WeightedGame g = random_game(rng, o);
            for (int a = 0; a <= 2; ++a)
                for (int b = 0; b <= 2; ++b)
                    for (bool dual : {false, true}) {
                        auto p = dual ? inf_dual_partition(g, pp(a, b)) : inf_partition(g, pp(a, b));
                        for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(bool(p.win1[v]) != bool(p.win2[v]));
                    }
        }
}

TEST_CASE("augmented Inf values are antitone in the running minimum") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 100; ++i) {
        RandomGameOptions o;
        o.measure = Measure::Inf;
        WeightedGame g = random_game(rng, o);
        std::vector<VertexId> roots(g.num_vertices());
        for (VertexId v = 0; v < g.num_vertices(); ++v) roots[v] = v;
        AugmentedGame aug = augment(g, roots);
        auto t = solve_lex_liminf(aug.game, Player::One);
        for (VertexId a = 0; a < aug.game.num_vertices(); ++a) {
            // The running minimum carried into a bounds the value at a.
            std::optional<Rational> carried;
            for (EdgeId e : aug.game.arena().out(a)) {
                if (!carried || aug.game.weight(e, 0) > *carried) carried = aug.game.weight(e, 0);
                for (EdgeId f : aug.game.arena().out(aug.game.arena().edge(e).dst))
                    CHECK(aug.game.weight(f, 0) <= aug.game.weight(e, 0));
            }
            CHECK(t.value[a].p1 <= *carried);
        }
    }
}

TEST_CASE("mean-payoff first component equals the one-dimensional value") {
    std::mt19937_64 rng(46);
    for (Measure m : {Measure::MeanPayoffInf, Measure::MeanPayoffSup})
        for (int i = 0; i < 200; ++i) {
            RandomGameOptions o;
            o.measure = m;
            o.max_vertices = 6;
            WeightedGame g = random_game(rng, o);
            for (Player w : {Player::One, Player::Two}) {
                std::vector<std::int64_t> own;
                for (EdgeId e = 0; e < g.num_edges(); ++e) own.push_back(g.weight(e, index_of(w)).to_int64());
                auto one_d = mean_payoff_values(g.arena(), own, w);
                auto t = solve_lex(g, w);
                for (VertexId v = 0; v < g.num_vertices(); ++v) CHECK(t.value[v][index_of(w)] == one_d[v]);
            }
        }
}

TEST_CASE("solvers match the oracle on random games for every measure") {
    std::mt19937_64 rng(47);
    for (Measure m : testing::all_measures())
        for (Rational lambda : {Rational(1, 2), Rational(1, 3), Rational(9, 10)}) {
            if (m != Measure::Discounted && lambda != Rational(1, 2)) continue;
            for (int i = 0; i < 100; ++i) {
                RandomGameOptions o;
                o.measure = m;
                o.discount = lambda;
                WeightedGame g = random_game(rng, o);
                auto tables = oracle_lex_values_both(g);
                for (Player w : {Player::One, Player::Two}) {
                    CAPTURE(measure_name(m));
                    const auto& oracle = tables[index_of(w)];
                    CHECK(oracle.determined());
                    LexValueTable t = solve_lex(g, w);
                    CHECK(t.value == oracle.maxmin);
                    if (i % 10 == 0) check_guarantees(g, t);
                }
            }
        }
}

TEST_CASE("scalarization constant") {
    WeightedGame g1 = testing::load_fixture("g1.game");
    Scalarization s = scalarize(g1, Player::One);
    CHECK(s.m == Rational(5 * 5) * s.info.max_weight2 + Rational(1));
    CHECK(s.weight.size() == static_cast<std::size_t>(g1.num_edges()));
}

TEST_CASE("mixed measures are rejected") {
    WeightedGame g = testing::load_fixture("g1.game");
    g.set_measure(1, Measure::LimInf);
    CHECK_THROWS_AS(solve_lex(g, Player::One), UnsupportedError);
}
