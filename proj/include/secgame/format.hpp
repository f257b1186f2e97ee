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

#ifndef SECGAME_FORMAT_HPP
#define SECGAME_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secgame/game.hpp"
#include "secgame/strategy.hpp"

namespace secgame {

struct Diagnostic {
    enum class Kind { Syntax, Semantic };
    Kind kind;
    int line;    // 1-based
    int column;  // 1-based
    std::string message;

    std::string str() const;
};

struct ParsedGame {
    std::optional<WeightedGame> game;
    std::optional<VertexId> init;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return game.has_value() && diagnostics.empty(); }
};

// Line-oriented game format:
//   measure <1|2> <inf|sup|liminf|limsup|mpinf|mpsup|disc>
//   discount <p/q>
//   vertex <name> <1|2>
//   edge <from> <to> <q1> <q2>
//   init <name>
// '#' starts a comment. Edges may reference vertices declared later.
ParsedGame parse_game(std::string_view text);
std::string serialize_game(const WeightedGame& game, std::optional<VertexId> init = std::nullopt);

struct ParsedProfile {
    std::optional<StrategyProfile> profile;
    std::optional<Lasso> outcome;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return profile.has_value() && diagnostics.empty(); }
};

std::string serialize_profile(const WeightedGame& game, const StrategyProfile& profile,
                              const std::optional<Lasso>& outcome);
ParsedProfile parse_profile(std::string_view text, const WeightedGame& game);

std::string lasso_to_string(const WeightedGame& game, const Lasso& lasso);

// DOT export. Vertex labels show the name, owner and (when given) a value.
std::string arena_to_dot(const WeightedGame& game, const std::vector<PayoffPair>* values = nullptr);
std::string machine_to_dot(const WeightedGame& game, const MealyStrategy& machine);

} // namespace secgame

#endif
