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
#include "secgame/constrained.hpp"
#include "secgame/equilibrium.hpp"
#include "secgame/lp.hpp"
#include "secgame/oracle.hpp"

using namespace secgame;

namespace {

struct FmRow {
    std::vector<Rational> a;
    Rational b;
    bool strict;
};

// Fourier-Motzkin elimination with strictness tracking: an exact, independent feasibility oracle.
bool fourier_motzkin(std::vector<FmRow> rows, int num_vars) {
    for (int k = 0; k < num_vars; ++k) {
        std::vector<FmRow> pos, neg, next;
        for (auto& r : rows) (r.a[k].sign() > 0 ? pos : r.a[k].sign() < 0 ? neg : next).push_back(r);
        for (const auto& p : pos)
            for (const auto& n : neg) {
                Rational sp = -n.a[k], sn = p.a[k];
                FmRow c{std::vector<Rational>(num_vars), sp * p.b + sn * n.b, p.strict || n.strict};
                for (int j = 0; j < num_vars; ++j) c.a[j] = sp * p.a[j] + sn * n.a[j];
                next.push_back(std::move(c));
            }
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.strict ? !(Rational(0) > r.b) : !(Rational(0) >= r.b)) return false;
    return true;
}

bool satisfies(const LinearSystem& s, const std::vector<Rational>& x) {
    auto dot = [&](const LinearRow& r) {
        Rational t;
        for (int j = 0; j < s.num_vars; ++j) t += r.coeff[j] * x[j];
        return t;
    };
    for (const auto& r : s.strict_rows)
        if (!(dot(r) > r.bound)) return false;
    for (const auto& r : s.nonstrict_rows)
        if (!(dot(r) >= r.bound)) return false;
    return true;
}

ExtRational ext(int x) { return x > 100 ? ExtRational::pos_inf() : x < -100 ? ExtRational::neg_inf() : ExtRational(Rational(x)); }

ThresholdBox box(int mu1, int mu2, int nu1, int nu2) {
    ThresholdBox b;
    b.mu = {ext(mu1), ext(mu2)};
    b.nu = {ext(nu1), ext(nu2)};
    return b;
}

constexpr int kInf = 1000;

bool in_box(const PayoffPair& p, const ThresholdBox& b) {
    for (int i = 0; i < 2; ++i)
        if (compare(b.mu[i], p[i]) == std::strong_ordering::greater || compare(b.nu[i], p[i]) == std::strong_ordering::less)
            return false;
    return true;
}

// Some lasso from v0 within the bounds is a secure outcome with payoff in the box.
bool lasso_search(const WeightedGame& g, VertexId v0, const ThresholdBox& b, const LexTables* tables) {
    bool found = false;
    int n = g.num_vertices();
    enumerate_lassos(g.arena(), v0, n, n, [&](const Lasso& l) {
        if (in_box(eval_lasso_payoff(g, l), b))
            found = tables ? check_secure_outcome(g, l, *tables) : is_secure_outcome(g, l);
        return !found;
    });
    return found;
}

ThresholdBox random_box(std::mt19937_64& rng) {
    auto pick = [&](int lo_inf) { int x = static_cast<int>(rng() % 4); return x == 3 ? lo_inf : x; };
    return box(pick(-kInf), pick(-kInf), pick(kInf), pick(kInf));
}

} // namespace

TEST_CASE("strict linear systems") {
    LinearSystem a;
    a.num_vars = 1;
    a.add_strict({1}, 0);
    a.add_nonstrict({1}, 1);
    LpResult ra = lp_feasible(a);
    CHECK(ra.feasible);
    CHECK(satisfies(a, ra.witness));

    LinearSystem b;
    b.num_vars = 1;
    b.add_strict({1}, 0);
    b.add_nonstrict({-1}, 0);
    CHECK_FALSE(lp_feasible(b).feasible);

    LinearSystem c;
    c.num_vars = 2;
    c.add_strict({1, 1}, 1);
    c.add_nonstrict({-1, 0}, Rational(-1, 2));
    c.add_nonstrict({0, -1}, Rational(-1, 2));
    CHECK_FALSE(lp_feasible(c).feasible);

    LinearSystem empty;
    empty.num_vars = 2;
    CHECK(lp_feasible(empty).feasible);
}

TEST_CASE("random linear systems agree with Fourier-Motzkin") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> coef(-3, 3);
    int feasible = 0;
    for (int i = 0; i < 1500; ++i) {
        bool with_strict = i % 2 == 1;
        LinearSystem s;
        s.num_vars = 1 + static_cast<int>(rng() % 3);
        std::vector<FmRow> rows;
        int m = 1 + static_cast<int>(rng() % 5);
        for (int r = 0; r < m; ++r) {
            std::vector<Rational> a(s.num_vars);
            for (auto& x : a) x = coef(rng);
            Rational bound(coef(rng), 1 + static_cast<int>(rng() % 2));
            bool strict = with_strict && rng() % 2;
            (strict ? s.strict_rows : s.nonstrict_rows).push_back({a, bound});
            rows.push_back({a, bound, strict});
        }
        LpResult r = lp_feasible(s);
        CHECK(r.feasible == fourier_motzkin(rows, s.num_vars));
        if (r.feasible) {
            ++feasible;
            CHECK(satisfies(s, r.witness));
        }
    }
    CHECK(feasible > 100);
    CHECK(feasible < 1400);
}

TEST_CASE("mean-payoff box paths") {
    WeightedGame loop;
    loop.add_vertex("a", Player::One);
    loop.add_edge(0, 0, 3, Rational(-1, 2));
    VertexSet one{1};
    BoxConstraints exact;
    exact[0].raise(Rational(3), false);
    exact[0].lower(Rational(3), false);
    exact[1].raise(Rational(-1, 2), false);
    exact[1].lower(Rational(-1, 2), false);
    CHECK(path_in_box_mp(loop, one, 0, exact));
    exact[1].raise(Rational(-1, 2), true);
    CHECK_FALSE(path_in_box_mp(loop, one, 0, exact));

    WeightedGame g2 = testing::load_fixture("g2.game");
    VertexSet all(2, 1);
    BoxConstraints ones;
    ones[0].raise(Rational(1), false);
    ones[1].raise(Rational(1), false);
    CHECK(path_in_box_mp(g2, all, 0, ones));
    BoxConstraints high;
    high[0].raise(Rational(2), true);
    CHECK_FALSE(path_in_box_mp(g2, all, 0, high));
    // Without the second loop the first weight cannot reach 1 with the second at 1.
    CHECK_FALSE(path_in_box_mp(g2, VertexSet{1, 0}, 0, ones));
}

TEST_CASE("a lasso inside the box implies a mean-payoff box path") {
    std::mt19937_64 rng(62);
    for (Measure m : {Measure::MeanPayoffInf, Measure::MeanPayoffSup})
        for (int i = 0; i < 300; ++i) {
            RandomGameOptions o;
            o.measure = m;
            WeightedGame g = random_game(rng, o);
            VertexSet alive(g.num_vertices(), 1);
            BoxConstraints b;
            for (auto& iv : b) {
                iv.raise(Rational(static_cast<long>(rng() % 3)), rng() % 2);
                iv.lower(Rational(static_cast<long>(rng() % 3)), rng() % 2);
            }
            VertexId from = static_cast<VertexId>(rng() % g.num_vertices());
            bool lasso = false;
            enumerate_lassos(g.arena(), from, g.num_vertices(), g.num_vertices() * 2, [&](const Lasso& l) {
                PayoffPair p = eval_lasso_payoff(g, l);
                lasso = b[0].contains(p.p1) && b[1].contains(p.p2);
                return !lasso;
            });
            if (lasso) CHECK(path_in_box_mp(g, alive, from, b));
        }
}

TEST_CASE("limit box paths agree with lasso enumeration") {
    std::mt19937_64 rng(63);
    for (Measure m : {Measure::LimInf, Measure::LimSup})
        for (int i = 0; i < 300; ++i) {
            RandomGameOptions o;
            o.measure = m;
            o.max_vertices = 6;
            WeightedGame g = random_game(rng, o);
            VertexSet alive(g.num_vertices(), 1);
            for (auto& a : alive) a = rng() % 5 != 0;
            BoxConstraints b;
            for (auto& iv : b) {
                iv.raise(Rational(static_cast<long>(rng() % 3)), rng() % 2);
                iv.lower(Rational(static_cast<long>(rng() % 3)), rng() % 2);
            }
            VertexId from = static_cast<VertexId>(rng() % g.num_vertices());
            bool lasso = false;
            if (alive[from])
                enumerate_lassos(g.arena(), from, g.num_vertices(), g.num_vertices(), [&](const Lasso& l) {
                    for (VertexId v : l.stem)
                        if (!alive[v]) return true;
                    for (VertexId v : l.cycle)
                        if (!alive[v]) return true;
                    PayoffPair p = eval_lasso_payoff(g, l);
                    lasso = b[0].contains(p.p1) && b[1].contains(p.p2);
                    return !lasso;
                });
            CHECK(path_in_box_liminf(g, alive, from, b) == lasso);
        }
}

TEST_CASE("constrained existence examples") {
    WeightedGame g2 = testing::load_fixture("g2.game");
    CHECK(decide_constrained_existence(g2, g2.vertex("v0"), box(1, 1, kInf, kInf)));
    WeightedGame g1 = testing::load_fixture("g1.game");
    CHECK(decide_constrained_existence(g1, g1.vertex("v0"), box(4, 4, 4, 4)));
    CHECK_FALSE(decide_constrained_existence(g1, g1.vertex("v0"), box(5, 0, kInf, kInf)));
    // (3,2) is the payoff of an outcome that is not secure.
    CHECK_FALSE(decide_constrained_existence(g1, g1.vertex("v0"), box(3, 2, 3, 2)));
    CHECK_FALSE(decide_constrained_existence(g1, g1.vertex("v0"), box(4, 4, 3, kInf)));

    WeightedGame disc = testing::load_fixture("g1_disc.game");
    CHECK_THROWS_WITH_AS(decide_constrained_existence(disc, 0, ThresholdBox{}),
                         doctest::Contains("unsupported: open problem"), UnsupportedError);
    WeightedGame mixed = g1;
    mixed.set_measure(1, Measure::LimInf);
    CHECK_THROWS_AS(decide_constrained_existence(mixed, 0, ThresholdBox{}), UnsupportedError);
}

TEST_CASE("constrained existence is monotone in the box") {
    std::mt19937_64 rng(64);
    for (Measure m : {Measure::Inf, Measure::Sup, Measure::LimInf, Measure::LimSup, Measure::MeanPayoffInf,
                      Measure::MeanPayoffSup})
        for (int i = 0; i < 60; ++i) {
            RandomGameOptions o;
            o.measure = m;
            WeightedGame g = random_game(rng, o);
            VertexId v0 = static_cast<VertexId>(rng() % g.num_vertices());
            ThresholdBox b = random_box(rng);
            ThresholdBox wider = b;
            int c = static_cast<int>(rng() % 2);
            wider.mu[c] = ExtRational::neg_inf();
            wider.nu[1 - c] = ExtRational::pos_inf();
            CAPTURE(measure_name(m));
            if (decide_constrained_existence(g, v0, b)) CHECK(decide_constrained_existence(g, v0, wider));
            // An unbounded box always contains the synthesized equilibrium.
            CHECK(decide_constrained_existence(g, v0, ThresholdBox{}));
        }
}

TEST_CASE("limit and extremum measures agree with bounded secure-lasso search") {
    std::mt19937_64 rng(65);
    for (Measure m : {Measure::LimInf, Measure::LimSup, Measure::Inf, Measure::Sup})
        for (int i = 0; i < 150; ++i) {
            RandomGameOptions o;
            o.measure = m;
            WeightedGame g = random_game(rng, o);
            VertexId v0 = static_cast<VertexId>(rng() % g.num_vertices());
            ThresholdBox b = random_box(rng);
            CAPTURE(measure_name(m));
            bool decided = decide_constrained_existence(g, v0, b);
            if (m == Measure::LimInf || m == Measure::LimSup) {
                LexTables t = solve_both(g);
                CHECK(decided == lasso_search(g, v0, b, &t));
            } else if (lasso_search(g, v0, b, nullptr)) {
                CHECK(decided);
            }
        }
}

TEST_CASE("a secure mean-payoff lasso in the box implies a positive answer") {
    std::mt19937_64 rng(66);
    for (Measure m : {Measure::MeanPayoffInf, Measure::MeanPayoffSup})
        for (int i = 0; i < 150; ++i) {
            RandomGameOptions o;
            o.measure = m;
            WeightedGame g = random_game(rng, o);
            VertexId v0 = static_cast<VertexId>(rng() % g.num_vertices());
            ThresholdBox b = random_box(rng);
            LexTables t = solve_both(g);
            if (lasso_search(g, v0, b, &t)) CHECK(decide_constrained_existence(g, v0, b));
        }
}
