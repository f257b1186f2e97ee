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
#include "secgame/equilibrium.hpp"
#include "secgame/format.hpp"
#include "secgame/oracle.hpp"

using namespace secgame;
using testing::pp;

namespace {

Lasso lasso(const WeightedGame& g, std::vector<std::string> stem, std::vector<std::string> cycle) {
    Lasso l;
    for (const auto& s : stem) l.stem.push_back(g.vertex(s));
    for (const auto& s : cycle) l.cycle.push_back(g.vertex(s));
    return l;
}

PositionalStrategy pick(const WeightedGame& g, Player p, std::vector<std::pair<std::string, std::string>> moves) {
    PositionalStrategy s{p, std::vector<EdgeId>(g.num_vertices(), -1)};
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.owner(v) == p) s.choice[v] = g.arena().out(v).front();
    for (const auto& [a, b] : moves) s.choice[g.vertex(a)] = g.arena().find_edge(g.vertex(a), g.vertex(b));
    return s;
}

// No positional deviation of either player improves on the outcome under its own order.
void check_no_positional_deviation(const WeightedGame& g, VertexId v0, const SecureEquilibrium& eq) {
    for (Player dev : {Player::One, Player::Two})
        for (const auto& s : enumerate_positional(g.arena(), dev)) {
            Lasso l = outcome_against_positional(g.arena(), eq.profile.of(opponent(dev)), s, v0);
            CHECK(lex_leq(eval_lasso_payoff(g, l), eq.payoff, dev));
        }
}

} // namespace

TEST_CASE("synthesis on the first fixture") {
    std::optional<VertexId> init;
    WeightedGame g1 = testing::load_fixture("g1.game", &init);
    VertexId v0 = *init;
    SecureEquilibrium eq = synthesize_secure_eq(g1, v0);
    CHECK(eq.outcome == lasso(g1, {"v0"}, {"v1"}));
    CHECK(eq.payoff == pp(4, 4));
    CHECK(outcome_of_profile(g1, v0, eq.profile) == eq.outcome);
    CHECK(memory_bound(g1) == 7);
    for (Player p : {Player::One, Player::Two}) CHECK(reachable_states(g1.arena(), eq.profile.of(p), v0) <= 7);
    CHECK(verify_profile_secure(g1, v0, eq.profile));
    check_no_positional_deviation(g1, v0, eq);

    // Player 1 leaves the track towards v2; player 2 punishes with v2 -> v4.
    Lasso dev = outcome_against_positional(g1.arena(), eq.profile.strat2, pick(g1, Player::One, {{"v0", "v2"}}), v0);
    CHECK(dev == lasso(g1, {"v0", "v2"}, {"v4"}));
}

TEST_CASE("secure outcome checks on the first fixture") {
    WeightedGame g1 = testing::load_fixture("g1.game");
    LexTables t = solve_both(g1);
    CHECK(check_secure_outcome(g1, lasso(g1, {"v0"}, {"v1"}), t));
    CHECK_FALSE(check_secure_outcome(g1, lasso(g1, {"v0", "v2"}, {"v4"}), t));
    CHECK(check_secure_outcome(g1, lasso(g1, {}, {"v3"}), t));
    CHECK(is_secure_outcome(g1, lasso(g1, {"v0"}, {"v1"})));

    // Unrolling the cycle does not change the verdict.
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        Lasso l = testing::random_lasso(g1.arena(), rng);
        Lasso unrolled = l;
        unrolled.stem.insert(unrolled.stem.end(), l.cycle.begin(), l.cycle.end());
        unrolled.cycle.insert(unrolled.cycle.end(), l.cycle.begin(), l.cycle.end());
        CHECK(check_secure_outcome(g1, l, t) == check_secure_outcome(g1, unrolled, t));
    }
}

TEST_CASE("verification examples") {
    WeightedGame g1 = testing::load_fixture("g1.game");
    VertexId v0 = g1.vertex("v0");
    // Player 1 to v1, player 2 to v3, memoryless: the outcome is a secure one.
    StrategyProfile nash{
        MealyStrategy::from_positional(g1.arena(), pick(g1, Player::One, {{"v0", "v1"}})),
        MealyStrategy::from_positional(g1.arena(), pick(g1, Player::Two, {{"v2", "v3"}}))};
    CHECK(outcome_of_profile(g1, v0, nash) == lasso(g1, {"v0"}, {"v1"}));
    CHECK(verify_profile_secure(g1, v0, nash));
    // Steering into the worse loop.
    StrategyProfile bad{
        MealyStrategy::from_positional(g1.arena(), pick(g1, Player::One, {{"v0", "v2"}})),
        MealyStrategy::from_positional(g1.arena(), pick(g1, Player::Two, {{"v2", "v4"}}))};
    CHECK_FALSE(verify_profile_secure(g1, v0, bad));

    // A single loop with constant machines yields that loop.
    StrategyProfile loop{MealyStrategy::from_positional(g1.arena(), pick(g1, Player::One, {})),
                         MealyStrategy::from_positional(g1.arena(), pick(g1, Player::Two, {}))};
    CHECK(outcome_of_profile(g1, g1.vertex("v3"), loop) == lasso(g1, {}, {"v3"}));
}

TEST_CASE("synthesis on the Inf fixture goes through the augmentation") {
    std::optional<VertexId> init;
    WeightedGame g3 = testing::load_fixture("g3.game", &init);
    CHECK(needs_augmentation(g3));
    SecureEquilibrium eq = synthesize_secure_eq(g3, *init);
    CHECK(eq.payoff == eval_lasso_payoff(g3, eq.outcome));
    CHECK(lex_leq(pp(2, 0), eq.payoff, Player::One));
    CHECK(memory_bound(g3) == 4LL * 6 * 6 + 3);
    for (Player p : {Player::One, Player::Two}) {
        CHECK_NOTHROW(check_machine(g3.arena(), eq.profile.of(p)));
        CHECK(reachable_states(g3.arena(), eq.profile.of(p), *init) <= memory_bound(g3));
    }
    CHECK(verify_profile_secure(g3, *init, eq.profile));
    check_no_positional_deviation(g3, *init, eq);
}

TEST_CASE("synthesized profiles on random games") {
    std::mt19937_64 rng(52);
    for (Measure m : testing::all_measures())
        for (int i = 0; i < 60; ++i) {
            RandomGameOptions o;
            o.measure = m;
            o.discount = i % 2 ? Rational(1, 3) : Rational(9, 10);
            WeightedGame g = random_game(rng, o);
            VertexId v0 = static_cast<VertexId>(rng() % g.num_vertices());
            CAPTURE(measure_name(m));
            SecureEquilibrium eq = synthesize_secure_eq(g, v0);
            CHECK(outcome_of_profile(g, v0, eq.profile) == eq.outcome);
            CHECK(eval_lasso_payoff(g, eq.outcome) == eq.payoff);
            for (Player p : {Player::One, Player::Two})
                CHECK(reachable_states(g.arena(), eq.profile.of(p), v0) <= memory_bound(g));
            CHECK(verify_profile_secure(g, v0, eq.profile));
            check_no_positional_deviation(g, v0, eq);
        }
}

TEST_CASE("profiles survive serialization") {
    std::optional<VertexId> init;
    WeightedGame g3 = testing::load_fixture("g3.game", &init);
    SecureEquilibrium eq = synthesize_secure_eq(g3, *init);
    ParsedProfile back = parse_profile(serialize_profile(g3, eq.profile, eq.outcome), g3);
    REQUIRE(back.ok());
    CHECK(outcome_of_profile(g3, *init, *back.profile) == eq.outcome);
}

TEST_CASE("mixed measures are rejected by synthesis") {
    WeightedGame g = testing::load_fixture("g1.game");
    g.set_measure(1, Measure::MeanPayoffSup);
    CHECK_THROWS_AS(synthesize_secure_eq(g, 0), UnsupportedError);
}
