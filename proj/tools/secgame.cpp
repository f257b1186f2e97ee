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

// Command-line front end: values, synth, verify, constrained, oracle, validate, dot.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "secgame/constrained.hpp"
#include "secgame/equilibrium.hpp"
#include "secgame/format.hpp"
#include "secgame/lex.hpp"
#include "secgame/oracle.hpp"
#include "secgame/results.hpp"

using namespace secgame;

namespace {

enum Exit { kTrue = 0, kFalse = 1, kParseError = 2, kUnsupported = 3, kCapExceeded = 4 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Loaded {
    WeightedGame game;
    std::optional<VertexId> init;
};

Loaded load_game(const std::string& path) {
    ParsedGame parsed = parse_game(read_file(path));
    if (!parsed.ok()) {
        std::string msg;
        for (const auto& d : parsed.diagnostics) msg += path + ":" + d.str() + "\n";
        throw InputError(msg.empty() ? path + ": invalid game" : msg.substr(0, msg.size() - 1));
    }
    return {std::move(*parsed.game), parsed.init};
}

VertexId initial_vertex(const Loaded& g, const std::string& name) {
    if (!name.empty()) {
        VertexId v = g.game.vertex(name);
        if (v < 0) throw InputError("unknown vertex '" + name + "'");
        return v;
    }
    if (g.init) return *g.init;
    throw InputError("no initial vertex: pass --init or declare 'init' in the game file");
}

Player player_arg(int p) {
    if (p != 1 && p != 2) throw InputError("--player must be 1 or 2");
    return p == 1 ? Player::One : Player::Two;
}

std::array<ExtRational, 2> pair_arg(const std::string& text, const char* flag) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError(std::string(flag) + " expects a,b");
    auto a = ExtRational::parse(text.substr(0, comma));
    auto b = ExtRational::parse(text.substr(comma + 1));
    if (!a || !b) throw InputError(std::string(flag) + ": bad number in '" + text + "'");
    return {*a, *b};
}

int verdict(bool answer) {
    std::cout << (answer ? "true" : "false") << "\n";
    return answer ? kTrue : kFalse;
}

// Differential run of the solver against brute force on a seeded corpus.
int random_oracle(int count, std::uint64_t seed, const std::string& measure_text, const std::string& discount_text,
                  std::size_t cap, int jobs) {
    auto measure = measure_from_name(measure_text);
    if (!measure) throw InputError("unknown measure '" + measure_text + "'");
    auto discount = Rational::parse(discount_text);
    if (!discount) throw InputError("bad discount '" + discount_text + "'");
    RandomGameOptions opts;
    opts.measure = *measure;
    opts.discount = *discount;
    std::vector<WeightedGame> games;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) games.push_back(random_game(rng, opts));

    std::vector<char> mismatch(count, 0), undetermined(count, 0);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            auto oracle = oracle_lex_values_both(games[i], cap);
            for (Player w : {Player::One, Player::Two}) {
                const OracleTable& o = oracle[index_of(w)];
                if (!o.determined()) undetermined[i] = 1;
                if (solve_lex(games[i], w).value != o.maxmin) mismatch[i] = 1;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    Json j;
    j["games"] = count;
    j["seed"] = seed;
    j["measure"] = measure_text;
    Json bad = Json::array();
    int undet = 0;
    for (int i = 0; i < count; ++i) {
        if (mismatch[i]) bad.push_back(i);
        undet += undetermined[i];
    }
    j["mismatches"] = bad;
    j["undetermined"] = undet;
    std::cout << j.dump(2) << "\n";
    return bad.empty() && undet == 0 ? kTrue : kFalse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicographic weighted games and secure equilibria"};
    app.require_subcommand(1);

    std::string game_path, init_name, profile_path, mu_text = "-inf,-inf", nu_text = "inf,inf";
    std::string measure_text = "mpinf", discount_text = "1/2", machine_path;
    int player = 1, count = 0, jobs = 1, machine_player = 0;
    std::uint64_t seed = 1;
    std::size_t cap = 1'000'000;
    bool as_json = false;

    auto* values = app.add_subcommand("values", "lexicographic values and optimal strategies");
    values->add_option("--game", game_path, "game file")->required();
    values->add_option("--player", player, "1 or 2");

    auto* synth = app.add_subcommand("synth", "synthesize a finite-memory secure equilibrium");
    synth->add_option("--game", game_path, "game file")->required();
    synth->add_option("--init", init_name, "initial vertex");
    synth->add_flag("--json", as_json, "print a JSON summary instead of the profile");

    auto* verify = app.add_subcommand("verify", "is the profile's outcome a secure-equilibrium outcome");
    verify->add_option("--game", game_path, "game file")->required();
    verify->add_option("--init", init_name, "initial vertex");
    verify->add_option("--profile", profile_path, "profile file")->required();

    auto* constrained = app.add_subcommand("constrained", "secure equilibrium with payoff in [mu, nu]");
    constrained->add_option("--game", game_path, "game file")->required();
    constrained->add_option("--init", init_name, "initial vertex");
    constrained->add_option("--mu", mu_text, "lower thresholds a,b (p/q, inf, -inf)");
    constrained->add_option("--nu", nu_text, "upper thresholds c,d (p/q, inf, -inf)");

    auto* oracle = app.add_subcommand("oracle", "brute-force values over positional strategies");
    oracle->add_option("--game", game_path, "game file");
    oracle->add_option("--player", player, "1 or 2");
    oracle->add_option("--random", count, "compare solver and oracle on this many random games");
    oracle->add_option("--seed", seed, "corpus seed");
    oracle->add_option("--measure", measure_text, "measure for random games");
    oracle->add_option("--discount", discount_text, "discount for random discounted games");
    oracle->add_option("--cap", cap, "enumeration cap");
    oracle->add_option("--jobs", jobs, "worker threads");

    auto* validate = app.add_subcommand("validate", "print diagnostics for a game file");
    validate->add_option("--game", game_path, "game file")->required();

    auto* dot = app.add_subcommand("dot", "DOT export of the arena or a machine");
    dot->add_option("--game", game_path, "game file")->required();
    dot->add_option("--profile", machine_path, "profile file");
    dot->add_option("--machine", machine_player, "machine of this player from --profile");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kParseError;
    }

    try {
        if (validate->parsed()) {
            ParsedGame parsed = parse_game(read_file(game_path));
            for (const auto& d : parsed.diagnostics) std::cout << game_path << ":" << d.str() << "\n";
            if (!parsed.ok()) return kParseError;
            std::cout << "ok\n";
            return kTrue;
        }
        if (oracle->parsed() && count > 0) return random_oracle(count, seed, measure_text, discount_text, cap, jobs);

        if (game_path.empty()) throw InputError("--game is required");
        Loaded g = load_game(game_path);

        if (values->parsed()) {
            std::cout << value_table_json(g.game, solve_lex(g.game, player_arg(player))).dump(2) << "\n";
            return kTrue;
        }
        if (oracle->parsed()) {
            std::cout << oracle_table_json(g.game, oracle_lex_values(g.game, player_arg(player), cap)).dump(2) << "\n";
            return kTrue;
        }
        if (synth->parsed()) {
            VertexId v0 = initial_vertex(g, init_name);
            SecureEquilibrium eq = synthesize_secure_eq(g.game, v0);
            if (as_json) {
                std::cout << equilibrium_json(g.game, eq, v0).dump(2) << "\n";
            } else {
                std::cout << serialize_profile(g.game, eq.profile, eq.outcome);
                std::cout << "# payoff " << eq.payoff.str() << "\n";
            }
            return kTrue;
        }
        if (verify->parsed()) {
            VertexId v0 = initial_vertex(g, init_name);
            ParsedProfile p = parse_profile(read_file(profile_path), g.game);
            if (!p.ok()) {
                for (const auto& d : p.diagnostics) std::cerr << profile_path << ":" << d.str() << "\n";
                return kParseError;
            }
            return verdict(verify_profile_secure(g.game, v0, *p.profile));
        }
        if (constrained->parsed()) {
            VertexId v0 = initial_vertex(g, init_name);
            ThresholdBox box{pair_arg(mu_text, "--mu"), pair_arg(nu_text, "--nu")};
            return verdict(decide_constrained_existence(g.game, v0, box));
        }
        if (dot->parsed()) {
            if (machine_path.empty()) {
                std::cout << arena_to_dot(g.game);
                return kTrue;
            }
            ParsedProfile p = parse_profile(read_file(machine_path), g.game);
            if (!p.ok()) {
                for (const auto& d : p.diagnostics) std::cerr << machine_path << ":" << d.str() << "\n";
                return kParseError;
            }
            std::cout << machine_to_dot(g.game, p.profile->of(player_arg(machine_player == 0 ? 1 : machine_player)));
            return kTrue;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const UnsupportedError& e) {
        std::cerr << e.what() << "\n";
        return kUnsupported;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCapExceeded;
    }
    return kParseError;
}
