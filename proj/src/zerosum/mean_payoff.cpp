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
#include <limits>
#include <stdexcept>

#include "secgame/kernels.hpp"

namespace secgame {

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;
constexpr __int128 kNarrowLimit = static_cast<__int128>(1) << 62;
constexpr __int128 kIterationBudget = 1 << 16;

// Minimum cycle mean inside one strongly connected component (Karp).
Rational karp_min_mean(const Arena& arena, const std::vector<VertexId>& comp, const std::vector<int>& local,
                       const EdgeMask& enabled, const std::vector<std::int64_t>& weight, int sign) {
    int s = static_cast<int>(comp.size());
    std::vector<std::vector<std::int64_t>> d(s + 1, std::vector<std::int64_t>(s, kUnreached));
    d[0][0] = 0;
    for (int k = 1; k <= s; ++k)
        for (int i = 0; i < s; ++i) {
            if (d[k - 1][i] >= kUnreached) continue;
            for (EdgeId e : arena.out(comp[i])) {
                if (!enabled[e]) continue;
                int j = local[arena.edge(e).dst];
                if (j < 0) continue;
                d[k][j] = std::min(d[k][j], d[k - 1][i] + sign * weight[e]);
            }
        }
    bool have = false;
    __int128 best_num = 0, best_den = 1;
    for (int j = 0; j < s; ++j) {
        if (d[s][j] >= kUnreached) continue;
        bool any = false;
        __int128 num = 0, den = 1;
        for (int k = 0; k < s; ++k) {
            if (d[k][j] >= kUnreached) continue;
            __int128 cn = static_cast<__int128>(d[s][j]) - d[k][j], cd = s - k;
            if (!any || cn * den > num * cd) {
                num = cn;
                den = cd;
                any = true;
            }
        }
        if (any && (!have || num * best_den < best_num * den)) {
            best_num = num;
            best_den = den;
            have = true;
        }
    }
    if (!have) throw std::logic_error("cyclic component without a closed walk");
    return Rational(static_cast<long>(best_num), static_cast<long>(best_den));
}

kernels::CsrGame to_csr(const Arena& arena, const std::vector<std::int64_t>& weight, Player maximizer) {
    kernels::CsrGame g;
    g.row.push_back(0);
    for (VertexId v = 0; v < arena.num_vertices(); ++v) {
        for (EdgeId e : arena.out(v)) {
            g.target.push_back(arena.edge(e).dst);
            g.weight.push_back(weight[e]);
        }
        g.row.push_back(static_cast<std::int32_t>(g.target.size()));
        g.maximize.push_back(arena.owner(v) == maximizer ? 1 : 0);
    }
    return g;
}

struct MeanPayoffCore {
    std::vector<Rational> value;
    std::optional<std::pair<PositionalStrategy, PositionalStrategy>> strategies;  // (max, min)
};

// Value iteration with periodic exact certification of the greedy profile.
class ValueIteration {
public:
    ValueIteration(const Arena& arena, const std::vector<std::int64_t>& weight, Player maximizer)
        : arena_(arena), weight_(weight), maximizer_(maximizer), csr_(to_csr(arena, weight, maximizer)) {
        n_ = arena.num_vertices();
        for (std::int64_t w : weight) max_abs_ = std::max<__int128>(max_abs_, w < 0 ? -static_cast<__int128>(w) : w);
        if (max_abs_ == 0) max_abs_ = 1;
        k_max_ = 4 * static_cast<__int128>(n_) * n_ * n_ * max_abs_;
        narrow_.assign(n_, 0);
        scratch_.assign(csr_.num_edges(), 0);
    }

    MeanPayoffCore run() {
        step_ = kernels::select_bellman_step();
        __int128 next_check = std::max(1, n_);
        __int128 budget = std::min<__int128>(k_max_, kIterationBudget);
        while (true) {
            while (k_ < next_check && k_ < budget) advance();
            auto [smax, smin] = greedy();
            if (auto vals = certify(smax, smin)) return {std::move(*vals), std::make_pair(smax, smin)};
            if (k_ >= budget) break;
            next_check = std::min(budget, next_check * 2);
        }
        if (k_ < k_max_)
            if (auto core = via_discounted()) return std::move(*core);
        while (k_ < k_max_) advance();
        return {rounded(), std::nullopt};
    }

private:
    __int128 nu(VertexId v) const { return wide_mode_ ? wide_[v] : narrow_[v]; }

    void advance() {
        if (!wide_mode_ && (k_ + 1) * max_abs_ >= kNarrowLimit) {
            wide_.assign(narrow_.begin(), narrow_.end());
            wide_mode_ = true;
        }
        if (wide_mode_) {
            std::vector<__int128> next(n_);
            kernels::bellman_step_wide(csr_, wide_.data(), next.data());
            wide_.swap(next);
        } else {
            std::vector<std::int64_t> next(n_);
            step_(csr_, narrow_.data(), next.data(), scratch_.data());
            narrow_.swap(next);
        }
        ++k_;
    }

    std::pair<PositionalStrategy, PositionalStrategy> greedy() const {
        PositionalStrategy smax{maximizer_, std::vector<EdgeId>(n_, -1)};
        PositionalStrategy smin{opponent(maximizer_), std::vector<EdgeId>(n_, -1)};
        for (VertexId v = 0; v < n_; ++v) {
            bool is_max = arena_.owner(v) == maximizer_;
            EdgeId best = -1;
            __int128 best_val = 0;
            for (EdgeId e : arena_.out(v)) {
                __int128 c = weight_[e] + nu(arena_.edge(e).dst);
                if (best < 0 || (is_max ? c > best_val : c < best_val)) {
                    best = e;
                    best_val = c;
                }
            }
            (is_max ? smax : smin).choice[v] = best;
        }
        return {smax, smin};
    }

    // Large weights: discounted optimal profiles for discounts 1 - 2^-j, j doubling, until one certifies.
    // Past 1 - 1/(4|V|^3 W) the discounted optimum is mean-payoff optimal, so the loop ends there.
    std::optional<MeanPayoffCore> via_discounted() const {
        std::vector<Rational> w(weight_.begin(), weight_.end());
        mpz_class bound = 4 * to_mpz(static_cast<__int128>(n_) * n_ * n_) * to_mpz(max_abs_);
        for (unsigned long j = 2;; j *= 2) {
            mpz_class scale = mpz_class(1) << j;
            Rational lambda = Rational(1) - Rational(mpz_class(1), scale);
            SolveResult1D d = solve_discounted(arena_, w, maximizer_, lambda);
            if (auto vals = certify(d.strat_max, d.strat_min))
                return MeanPayoffCore{std::move(*vals), std::make_pair(d.strat_max, d.strat_min)};
            if (scale > bound) return std::nullopt;
        }
    }

    // Values guaranteed by each side; equal everywhere means both are optimal.
    std::optional<std::vector<Rational>> certify(const PositionalStrategy& smax, const PositionalStrategy& smin) const {
        EdgeMask fixed_max(arena_.num_edges(), 0), fixed_min(arena_.num_edges(), 0);
        for (VertexId v = 0; v < n_; ++v)
            for (EdgeId e : arena_.out(v)) {
                bool is_max = arena_.owner(v) == maximizer_;
                fixed_max[e] = is_max ? smax.choice[v] == e : 1;
                fixed_min[e] = is_max ? 1 : smin.choice[v] == e;
            }
        auto lower = one_player_mean_values(arena_, weight_, fixed_max, false);
        auto upper = one_player_mean_values(arena_, weight_, fixed_min, true);
        if (lower != upper) return std::nullopt;
        return lower;
    }

    // Closest fraction with denominator <= |V|; exact once k reaches 4|V|^3 W.
    std::vector<Rational> rounded() const {
        std::vector<Rational> out(n_);
        mpz_class k = to_mpz(k_);
        for (VertexId v = 0; v < n_; ++v) {
            Rational x(to_mpz(nu(v)), k);
            Rational best;
            Rational best_dist;
            for (int q = 1; q <= n_; ++q) {
                mpz_class num = 2 * to_mpz(nu(v)) * q + k, den = 2 * k, p;
                mpz_fdiv_q(p.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                Rational cand(p, mpz_class(q));
                Rational dist = abs(cand - x);
                if (q == 1 || dist < best_dist) {
                    best = cand;
                    best_dist = dist;
                }
            }
            out[v] = best;
        }
        return out;
    }

    static mpz_class to_mpz(__int128 x) {
        bool neg = x < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
        mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0UL));
        mpz_class r = (hi << 64) + lo;
        return neg ? mpz_class(-r) : r;
    }

    const Arena& arena_;
    const std::vector<std::int64_t>& weight_;
    Player maximizer_;
    kernels::CsrGame csr_;
    kernels::BellmanStep step_ = nullptr;
    int n_ = 0;
    __int128 max_abs_ = 0;
    __int128 k_max_ = 0;
    __int128 k_ = 0;
    bool wide_mode_ = false;
    std::vector<std::int64_t> narrow_;
    std::vector<__int128> wide_;
    std::vector<std::int64_t> scratch_;
};

std::vector<std::int64_t> restricted_weights(const RestrictedArena& r, const std::vector<std::int64_t>& weight) {
    std::vector<std::int64_t> w;
    w.reserve(r.edge_origin.size());
    for (EdgeId e : r.edge_origin) w.push_back(weight[e]);
    return w;
}

} // namespace

std::vector<Rational> one_player_mean_values(const Arena& arena, const std::vector<std::int64_t>& weight,
                                             const EdgeMask& enabled, bool maximize) {
    int n = arena.num_vertices();
    int sign = maximize ? -1 : 1;
    auto comps = strongly_connected_components(arena, nullptr, &enabled);
    std::vector<int> comp_of(n, -1), local(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (VertexId v : comps[c]) comp_of[v] = static_cast<int>(c);
    std::vector<std::optional<Rational>> best(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        bool cyclic = comp.size() > 1;
        for (VertexId v : comp)
            for (EdgeId e : arena.out(v)) {
                if (!enabled[e]) continue;
                int t = comp_of[arena.edge(e).dst];
                if (t == static_cast<int>(c)) {
                    if (arena.edge(e).dst == v) cyclic = true;
                } else if (best[t] && (!best[c] || *best[t] < *best[c])) {
                    best[c] = best[t];
                }
            }
        if (cyclic) {
            Rational mu = karp_min_mean(arena, comp, local, enabled, weight, sign);
            if (!best[c] || mu < *best[c]) best[c] = mu;
        }
        for (VertexId v : comp) local[v] = -1;
    }
    std::vector<Rational> out(n);
    for (VertexId v = 0; v < n; ++v) {
        if (!best[comp_of[v]]) throw std::invalid_argument("vertex cannot reach a cycle");
        out[v] = sign < 0 ? -*best[comp_of[v]] : *best[comp_of[v]];
    }
    return out;
}

std::vector<Rational> mean_payoff_values(const Arena& arena, const std::vector<std::int64_t>& weight,
                                         Player maximizer) {
    return ValueIteration(arena, weight, maximizer).run().value;
}

SolveResult1D solve_mean_payoff(const Arena& arena, const std::vector<std::int64_t>& weight, Player maximizer) {
    MeanPayoffCore core = ValueIteration(arena, weight, maximizer).run();
    SolveResult1D res;
    res.value = core.value;
    if (core.strategies) {
        res.strat_max = core.strategies->first;
        res.strat_min = core.strategies->second;
        return res;
    }
    auto preserves = [&](const EdgeMask& mask) {
        RestrictedArena r = restrict_edges(arena, mask);
        return mean_payoff_values(r.arena, restricted_weights(r, weight), maximizer) == core.value;
    };
    res.strat_max = edge_dichotomy(arena, maximizer, preserves);
    res.strat_min = edge_dichotomy(arena, opponent(maximizer), preserves);
    return res;
}

} // namespace secgame
