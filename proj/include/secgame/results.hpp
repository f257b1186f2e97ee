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

#ifndef SECGAME_RESULTS_HPP
#define SECGAME_RESULTS_HPP

#include "json.hpp"

#include "secgame/equilibrium.hpp"
#include "secgame/lex.hpp"
#include "secgame/oracle.hpp"

namespace secgame {

using Json = nlohmann::ordered_json;

// Rationals appear as reduced "p/q" strings; pairs as two-element arrays.
Json to_json(const PayoffPair& p);
Json to_json(const WeightedGame& game, const PositionalStrategy& s);
Json value_table_json(const WeightedGame& game, const LexValueTable& table);
Json oracle_table_json(const WeightedGame& game, const OracleTable& table);
Json equilibrium_json(const WeightedGame& game, const SecureEquilibrium& eq, VertexId v0);
Json decision_json(const char* question, bool answer);

} // namespace secgame

#endif
