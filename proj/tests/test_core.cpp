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

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "secgame/game.hpp"
#include "secgame/oracle.hpp"

using namespace secgame;
using secgame::testing::pp;

TEST_CASE("rationals parse and print reduced") {
    CHECK(Rational::parse("6/4")->str() == "3/2");
    CHECK(Rational::parse("-4")->str() == "-4");
    CHECK(Rational::parse("+7/7")->str() == "1");
    CHECK_FALSE(Rational::parse("1/0"));
    CHECK_FALSE(Rational::parse("1/-2"));
    CHECK_FALSE(Rational::parse("x"));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(ExtRational::parse("-inf")->tag() == ExtRational::Tag::NegInf);
    CHECK(*ExtRational::parse("inf") > ExtRational(Rational(1000000)));
    CHECK(ExtRational::neg_inf() < ExtRational(Rational(-1000000)));
}

TEST_CASE("lexicographic order examples") {
    CHECK(lex_compare(pp(4, 4), pp(4, 3), Player::One) == std::strong_ordering::less);
    CHECK(lex_compare(pp(3, 2), pp(4, 3), Player::Two) == std::strong_ordering::less);
    CHECK(lex_compare(pp(1, 1), pp(1, 1), Player::One) == std::strong_ordering::equal);
    CHECK(lex_compare(pp(5, 9), pp(5, 9), Player::Two) == std::strong_ordering::equal);
}

TEST_CASE("lexicographic order is a total order") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-2, 2);
    auto draw = [&] { return pp(d(rng), d(rng)); };
    for (Player w : {Player::One, Player::Two})
        for (int i = 0; i < 2000; ++i) {
            PayoffPair a = draw(), b = draw(), c = draw();
            CHECK((lex_leq(a, b, w) || lex_leq(b, a, w)));
            if (lex_leq(a, b, w) && lex_leq(b, a, w)) CHECK(a == b);
            if (lex_leq(a, b, w) && lex_leq(b, c, w)) CHECK(lex_leq(a, c, w));
        }
}

TEST_CASE("lasso payoffs on the fixtures") {
    WeightedGame g1 = testing::load_fixture("g1.game");
    CHECK(eval_lasso_payoff(g1, Lasso{{g1.vertex("v0")}, {g1.vertex("v1")}}) == pp(4, 4));
    WeightedGame g3 = testing::load_fixture("g3.game");
    Lasso l{{g3.vertex("v0"), g3.vertex("v2")}, {g3.vertex("v4")}};
    CHECK(eval_lasso_payoff(g3, l) == pp(2, 1));

    WeightedGame loop;
    loop.add_vertex("a", Player::One);
    loop.add_edge(0, 0, Rational(-7, 3), 5);
    for (Rational lambda : {Rational(1, 2), Rational(1, 3), Rational(9, 10)}) {
        auto g = testing::with_measure(loop, Measure::Discounted, lambda);
        CHECK(eval_lasso_payoff(g, Lasso{{}, {0}}) == PayoffPair{Rational(-7, 3), 5});
    }
}

TEST_CASE("invalid lassos are rejected") {
    WeightedGame g1 = testing::load_fixture("g1.game");
    CHECK_THROWS(eval_lasso_payoff(g1, Lasso{{}, {g1.vertex("v0")}}));
    CHECK_THROWS(eval_lasso_payoff(g1, Lasso{{g1.vertex("v1")}, {g1.vertex("v3")}}));
    CHECK_THROWS(eval_lasso_payoff(g1, Lasso{{}, {}}));
}

namespace {

// Random game with rational weights in [-2, 2] and denominators up to 3.
WeightedGame rational_game(std::mt19937_64& rng, Measure m) {
    RandomGameOptions o;
    o.measure = m;
    o.discount = Rational(2, 5);
    WeightedGame g = random_game(rng, o);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        for (int c = 0; c < 2; ++c) g.set_weight(e, c, Rational(num(rng), den(rng)));
    return g;
}

// Prepends a predecessor of the lasso's initial vertex, if there is one.
std::optional<Lasso> extend_back(const Arena& a, const Lasso& l) {
    VertexId v = l.initial();
    if (a.in(v).empty()) return std::nullopt;
    Lasso r = l;
    r.stem.insert(r.stem.begin(), a.edge(a.in(v).front()).src);
    return r;
}

} // namespace

TEST_CASE("limit measures ignore prefixes") {
    std::mt19937_64 rng(3);
    for (Measure m : {Measure::LimInf, Measure::LimSup, Measure::MeanPayoffInf, Measure::MeanPayoffSup})
        for (int i = 0; i < 300; ++i) {
            WeightedGame g = rational_game(rng, m);
            Lasso l = testing::random_lasso(g.arena(), rng);
            auto longer = extend_back(g.arena(), l);
            if (longer) CHECK(eval_lasso_payoff(g, *longer) == eval_lasso_payoff(g, l));
        }
}

TEST_CASE("discounted payoff is prefix-linear") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        WeightedGame g = rational_game(rng, Measure::Discounted);
        const Rational& lambda = *g.discount();
        Lasso l = testing::random_lasso(g.arena(), rng);
        auto longer = extend_back(g.arena(), l);
        if (!longer) continue;
        EdgeId e = g.arena().find_edge(longer->stem.front(), l.initial());
        PayoffPair base = eval_lasso_payoff(g, l), ext = eval_lasso_payoff(g, *longer);
        for (int c = 0; c < 2; ++c) CHECK(ext[c] == (Rational(1) - lambda) * g.weight(e, c) + lambda * base[c]);
    }
}

TEST_CASE("discounted closed form matches a truncated series") {
    std::mt19937_64 rng(5);
    for (Rational lambda : {Rational(1, 2), Rational(1, 3), Rational(9, 10)})
        for (int i = 0; i < 100; ++i) {
            WeightedGame g = rational_game(rng, Measure::Discounted);
            g.set_discount(lambda);
            Lasso l = testing::random_lasso(g.arena(), rng);
            LassoEdges edges = lasso_edges(g.arena(), l);
            double eps = 1e-6, lam = lambda.to_double();
            long terms = 10L * g.num_vertices() * static_cast<long>(std::ceil(std::log(1 / eps) / std::log(1 / lam)));
            PayoffPair exact = eval_lasso_payoff(g, l);
            for (int c = 0; c < 2; ++c) {
                double sum = 0, pw = 1;
                for (long k = 0; k < terms; ++k) {
                    EdgeId e = k < static_cast<long>(edges.stem.size())
                                   ? edges.stem[k]
                                   : edges.cycle[(k - edges.stem.size()) % edges.cycle.size()];
                    sum += pw * g.weight(e, c).to_double();
                    pw *= lam;
                }
                CHECK(std::abs((1 - lam) * sum - exact[c].to_double()) < eps);
            }
        }
}

TEST_CASE("unrolling the cycle keeps the payoff") {
    std::mt19937_64 rng(6);
    for (Measure m : testing::all_measures())
        for (int i = 0; i < 100; ++i) {
            WeightedGame g = rational_game(rng, m);
            Lasso l = testing::random_lasso(g.arena(), rng);
            Lasso u = l;
            for (int k = 0; k < 2; ++k) u.stem.insert(u.stem.end(), l.cycle.begin(), l.cycle.end());
            Lasso rotated = l;
            rotated.stem.push_back(l.cycle.front());
            std::rotate(rotated.cycle.begin(), rotated.cycle.begin() + 1, rotated.cycle.end());
            PayoffPair p = eval_lasso_payoff(g, l);
            CHECK(eval_lasso_payoff(g, u) == p);
            CHECK(eval_lasso_payoff(g, rotated) == p);
        }
}

TEST_CASE("weight normalization") {
    WeightedGame g;
    g.add_vertex("a", Player::One);
    g.add_edge(0, 0, Rational(-1, 2), Rational(3, 2));
    auto [n, info] = normalize_weights(g);
    CHECK(info.b_star == 2);
    CHECK(info.a_star == -1);
    CHECK(n.weight(0, 0) == 1);
    CHECK(n.weight(0, 1) == 5);
    CHECK(info.max_weight == 5);
    CHECK(denormalize(5, info) == Rational(3, 2));
    CHECK(denormalize_value(pp(0, 0), info, Measure::Inf) == pp(-1, -1));

    WeightedGame nat = testing::load_fixture("g1.game");
    auto [same, id] = normalize_weights(nat);
    CHECK(id.b_star == 1);
    CHECK(id.a_star == 0);
    for (EdgeId e = 0; e < nat.num_edges(); ++e) CHECK(same.weight(e, 0) == nat.weight(e, 0));
    CHECK(denormalize_value(pp(4, 3), id, Measure::MeanPayoffInf) == pp(4, 3));

    WeightedGame zero;
    zero.add_vertex("z", Player::Two);
    zero.add_edge(0, 0, 0, 0);
    CHECK(normalize_weights(zero).first.weight(0, 0) == 0);
}

TEST_CASE("normalizing then denormalizing lasso payoffs is the identity") {
    std::mt19937_64 rng(8);
    for (Measure m : testing::all_measures())
        for (int i = 0; i < 100; ++i) {
            WeightedGame g = rational_game(rng, m);
            auto [n, info] = normalize_weights(g);
            for (EdgeId e = 0; e < n.num_edges(); ++e)
                for (int c = 0; c < 2; ++c) {
                    CHECK(n.weight(e, c).is_integer());
                    CHECK(n.weight(e, c).sign() >= 0);
                }
            Lasso l = testing::random_lasso(g.arena(), rng);
            CHECK(denormalize_value(eval_lasso_payoff(n, l), info, m) == eval_lasso_payoff(g, l));
        }
}

TEST_CASE("validation reports structural problems") {
    CHECK(validate_game(testing::load_fixture("g1.game")).empty());

    WeightedGame sink;
    sink.add_vertex("a", Player::One);
    sink.add_vertex("dead", Player::Two);
    sink.add_edge(0, 1, 0, 0);
    auto v = validate_game(sink);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::Deadlock);
    CHECK(v[0].message.find("dead") != std::string::npos);

    WeightedGame disc = testing::with_measure(testing::load_fixture("g1.game"), Measure::Discounted, Rational(1));
    auto d = validate_game(disc);
    REQUIRE(d.size() == 1);
    CHECK(d[0].kind == Violation::Kind::DiscountOutOfRange);

    disc.set_discount(std::nullopt);
    CHECK(validate_game(disc).at(0).kind == Violation::Kind::MissingDiscount);
}
