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

#include "secgame/results.hpp"

#include "secgame/format.hpp"
#include "secgame/strategy.hpp"

namespace secgame {

Json to_json(const PayoffPair& p) { return Json::array({p.p1.str(), p.p2.str()}); }

Json to_json(const WeightedGame& game, const PositionalStrategy& s) {
    Json j = Json::object();
    for (VertexId v = 0; v < game.num_vertices(); ++v)
        if (game.owner(v) == s.player && s.choice[v] >= 0)
            j[game.name(v)] = game.name(game.arena().edge(s.choice[v]).dst);
    return j;
}

Json value_table_json(const WeightedGame& game, const LexValueTable& t) {
    Json j;
    j["player"] = number_of(t.which);
    j["measures"] = Json::array({std::string(measure_name(game.measure(0))), std::string(measure_name(game.measure(1)))});
    Json values = Json::object();
    for (VertexId v = 0; v < game.num_vertices(); ++v) values[game.name(v)] = to_json(t.value[v]);
    j["values"] = values;
    j["uniform"] = t.uniform;
    Player other = opponent(t.which);
    if (t.uniform) {
        j["strategies"] = Json{{"player" + std::to_string(number_of(t.which)), to_json(game, t.protagonist.front())},
                               {"player" + std::to_string(number_of(other)), to_json(game, t.antagonist.front())}};
    } else {
        Json per = Json::object();
        for (VertexId v = 0; v < game.num_vertices(); ++v)
            per[game.name(v)] = Json{{"player" + std::to_string(number_of(t.which)), to_json(game, t.protagonist[v])},
                                     {"player" + std::to_string(number_of(other)), to_json(game, t.antagonist[v])}};
        j["strategies"] = per;
    }
    return j;
}

Json oracle_table_json(const WeightedGame& game, const OracleTable& t) {
    Json j;
    j["player"] = number_of(t.which);
    Json maxmin = Json::object(), minmax = Json::object();
    for (VertexId v = 0; v < game.num_vertices(); ++v) {
        maxmin[game.name(v)] = to_json(t.maxmin[v]);
        minmax[game.name(v)] = to_json(t.minmax[v]);
    }
    j["maxmin"] = maxmin;
    j["minmax"] = minmax;
    j["determined"] = t.determined();
    return j;
}

Json equilibrium_json(const WeightedGame& game, const SecureEquilibrium& eq, VertexId v0) {
    Json j;
    j["init"] = game.name(v0);
    j["outcome"] = lasso_to_string(game, eq.outcome);
    j["payoff"] = to_json(eq.payoff);
    j["memory"] = Json::array({reachable_states(game.arena(), eq.profile.strat1, v0),
                               reachable_states(game.arena(), eq.profile.strat2, v0)});
    j["memory_bound"] = memory_bound(game);
    return j;
}

Json decision_json(const char* question, bool answer) {
    Json j;
    j[question] = answer;
    return j;
}

} // namespace secgame
