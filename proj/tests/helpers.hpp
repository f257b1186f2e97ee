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

// Shared fixtures and small helpers for the test binaries.

#ifndef SECGAME_TESTS_HELPERS_HPP
#define SECGAME_TESTS_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "secgame/format.hpp"
#include "secgame/game.hpp"

namespace secgame::testing {

inline WeightedGame load_fixture(const std::string& name, std::optional<VertexId>* init = nullptr) {
    std::ifstream in(std::string(SECGAME_GAMES_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    ParsedGame p = parse_game(os.str());
    if (!p.ok()) throw std::runtime_error("fixture " + name + " does not parse");
    if (init) *init = p.init;
    return *p.game;
}

inline WeightedGame with_measure(WeightedGame g, Measure m, std::optional<Rational> discount = std::nullopt) {
    g.set_measure(0, m);
    g.set_measure(1, m);
    g.set_discount(m == Measure::Discounted ? discount : std::nullopt);
    return g;
}

inline PayoffPair pp(long a, long b) { return PayoffPair{a, b}; }

inline const std::vector<Measure>& all_measures() {
    static const std::vector<Measure> ms{Measure::Inf,           Measure::Sup,           Measure::LimInf,
                                         Measure::LimSup,        Measure::MeanPayoffInf, Measure::MeanPayoffSup,
                                         Measure::Discounted};
    return ms;
}

// Random lasso: a random walk of at least a few steps, closed at the first
// later step that revisits an earlier vertex.
inline Lasso random_lasso(const Arena& a, std::mt19937_64& rng, int max_len = 8) {
    std::uniform_int_distribution<int> start(0, a.num_vertices() - 1);
    std::size_t steps = std::uniform_int_distribution<int>(1, max_len)(rng);
    std::vector<VertexId> walk{start(rng)};
    for (;;) {
        const auto& out = a.out(walk.back());
        walk.push_back(a.edge(out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)]).dst);
        if (walk.size() - 1 < steps) continue;
        for (std::size_t j = 0; j + 1 < walk.size(); ++j)
            if (walk[j] == walk.back())
                return Lasso{{walk.begin(), walk.begin() + j}, {walk.begin() + j, walk.end() - 1}};
    }
}

} // namespace secgame::testing

#endif
