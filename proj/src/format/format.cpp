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

#include "secgame/format.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace secgame {

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != '#' && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view l = text.substr(start, end - start);
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
        lines.push_back(l);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
    return v;
}

class DiagnosticSink {
public:
    explicit DiagnosticSink(std::vector<Diagnostic>& out) : out_(out) {}
    void syntax(int line, int col, std::string msg) {
        out_.push_back({Diagnostic::Kind::Syntax, line, col, std::move(msg)});
    }
    void semantic(int line, int col, std::string msg) {
        out_.push_back({Diagnostic::Kind::Semantic, line, col, std::move(msg)});
    }

private:
    std::vector<Diagnostic>& out_;
};

// Column just after the last token, for "missing token" errors.
int end_column(const std::vector<Token>& toks) {
    const Token& t = toks.back();
    return t.column + static_cast<int>(t.text.size());
}

} // namespace

std::string Diagnostic::str() const {
    std::ostringstream os;
    os << (kind == Kind::Syntax ? "syntax error" : "semantic error") << " at " << line << ":" << column << ": "
       << message;
    return os.str();
}

ParsedGame parse_game(std::string_view text) {
    ParsedGame result;
    DiagnosticSink sink(result.diagnostics);

    struct PendingEdge {
        Token from, to;
        Rational w1, w2;
        int line;
    };
    struct PendingVertex {
        std::string name;
        Player owner;
    };
    std::array<std::optional<Measure>, 2> measures;
    std::optional<Rational> discount;
    int discount_line = 0;
    std::vector<PendingVertex> vertices;
    std::map<std::string, int, std::less<>> vertex_lines;
    std::vector<PendingEdge> edges;
    std::optional<std::pair<Token, int>> init;
    int declarations = 0;

    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line = static_cast<int>(li) + 1;
        auto toks = tokenize(lines[li]);
        if (toks.empty()) continue;
        ++declarations;
        std::string_view kw = toks[0].text;
        auto arity = [&](std::size_t n, const char* usage) {
            if (toks.size() < n) {
                sink.syntax(line, end_column(toks), std::string("expected ") + usage);
                return false;
            }
            if (toks.size() > n) {
                sink.syntax(line, toks[n].column, "unexpected token '" + std::string(toks[n].text) + "'");
                return false;
            }
            return true;
        };
        auto rational = [&](const Token& t) -> std::optional<Rational> {
            auto r = Rational::parse(t.text);
            if (!r) sink.syntax(line, t.column, "expected a rational (p, -p or p/q), got '" + std::string(t.text) + "'");
            return r;
        };
        if (kw == "measure") {
            if (!arity(3, "'measure <1|2> <name>'")) continue;
            auto which = parse_int(toks[1].text);
            if (!which || (*which != 1 && *which != 2)) {
                sink.syntax(line, toks[1].column, "expected player 1 or 2");
                continue;
            }
            auto m = measure_from_name(toks[2].text);
            if (!m) {
                sink.syntax(line, toks[2].column,
                            "expected one of inf|sup|liminf|limsup|mpinf|mpsup|disc, got '" + std::string(toks[2].text) + "'");
                continue;
            }
            if (measures[*which - 1]) {
                sink.semantic(line, toks[0].column, "measure " + std::to_string(*which) + " declared twice");
                continue;
            }
            measures[*which - 1] = *m;
        } else if (kw == "discount") {
            if (!arity(2, "'discount <p/q>'")) continue;
            auto r = rational(toks[1]);
            if (!r) continue;
            if (discount) {
                sink.semantic(line, toks[0].column, "discount declared twice");
                continue;
            }
            if (r->sign() <= 0 || *r >= Rational(1)) {
                sink.semantic(line, toks[1].column, "discount out of range: " + r->str() + " is not in (0,1)");
                continue;
            }
            discount = *r;
            discount_line = line;
        } else if (kw == "vertex") {
            if (!arity(3, "'vertex <name> <1|2>'")) continue;
            auto owner = parse_int(toks[2].text);
            if (!owner || (*owner != 1 && *owner != 2)) {
                sink.syntax(line, toks[2].column, "expected owner 1 or 2");
                continue;
            }
            std::string name(toks[1].text);
            if (vertex_lines.count(name)) {
                sink.semantic(line, toks[1].column,
                              "duplicate vertex '" + name + "' (first declared on line " +
                                  std::to_string(vertex_lines.find(name)->second) + ")");
                continue;
            }
            vertex_lines.emplace(name, line);
            vertices.push_back({name, *owner == 1 ? Player::One : Player::Two});
        } else if (kw == "edge") {
            if (!arity(5, "'edge <from> <to> <q1> <q2>'")) continue;
            auto w1 = rational(toks[3]);
            auto w2 = rational(toks[4]);
            if (!w1 || !w2) continue;
            edges.push_back({toks[1], toks[2], *w1, *w2, line});
        } else if (kw == "init") {
            if (!arity(2, "'init <name>'")) continue;
            if (init) {
                sink.semantic(line, toks[0].column, "init declared twice");
                continue;
            }
            init = std::make_pair(toks[1], line);
        } else {
            sink.syntax(line, toks[0].column,
                        "expected one of measure|discount|vertex|edge|init, got '" + std::string(kw) + "'");
        }
    }

    if (declarations == 0) {
        sink.syntax(1, 1, "empty game: expected a declaration");
        return result;
    }
    if (!result.diagnostics.empty()) return result;

    int last_line = static_cast<int>(lines.size());
    for (int i = 0; i < 2; ++i)
        if (!measures[i]) sink.semantic(last_line, 1, "missing 'measure " + std::to_string(i + 1) + "' declaration");
    if (vertices.empty()) sink.semantic(last_line, 1, "game has no vertices");

    WeightedGame g;
    for (auto& pv : vertices) g.add_vertex(pv.name, pv.owner);
    std::set<std::pair<VertexId, VertexId>> seen_edges;
    for (auto& pe : edges) {
        VertexId u = g.vertex(pe.from.text), v = g.vertex(pe.to.text);
        if (u < 0) sink.semantic(pe.line, pe.from.column, "unknown vertex '" + std::string(pe.from.text) + "'");
        if (v < 0) sink.semantic(pe.line, pe.to.column, "unknown vertex '" + std::string(pe.to.text) + "'");
        if (u < 0 || v < 0) continue;
        if (!seen_edges.insert({u, v}).second) {
            sink.semantic(pe.line, pe.from.column,
                          "duplicate edge " + std::string(pe.from.text) + " -> " + std::string(pe.to.text));
            continue;
        }
        g.add_edge(u, v, pe.w1, pe.w2);
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.arena().out(v).empty())
            sink.semantic(vertex_lines.find(g.name(v))->second, 1,
                          "deadlock: vertex '" + g.name(v) + "' has no outgoing edge");
    if (measures[0] && measures[1]) {
        g.set_measure(0, *measures[0]);
        g.set_measure(1, *measures[1]);
        bool disc = *measures[0] == Measure::Discounted || *measures[1] == Measure::Discounted;
        if (disc && !discount) sink.semantic(last_line, 1, "missing discount: a discounted measure needs 'discount <p/q>'");
        if (!disc && discount) sink.semantic(discount_line, 1, "discount given but no measure is discounted");
    }
    g.set_discount(discount);
    if (init) {
        VertexId v = g.vertex(init->first.text);
        if (v < 0)
            sink.semantic(init->second, init->first.column, "unknown vertex '" + std::string(init->first.text) + "'");
        else
            result.init = v;
    }
    if (result.diagnostics.empty()) result.game = std::move(g);
    return result;
}

std::string serialize_game(const WeightedGame& game, std::optional<VertexId> init) {
    std::ostringstream os;
    os << "measure 1 " << measure_name(game.measure(0)) << "\n";
    os << "measure 2 " << measure_name(game.measure(1)) << "\n";
    if (game.discount()) os << "discount " << game.discount()->str() << "\n";
    for (VertexId v = 0; v < game.num_vertices(); ++v)
        os << "vertex " << game.name(v) << " " << number_of(game.owner(v)) << "\n";
    for (EdgeId e = 0; e < game.num_edges(); ++e) {
        const Edge& ed = game.arena().edge(e);
        os << "edge " << game.name(ed.src) << " " << game.name(ed.dst) << " " << game.weight(e, 0) << " "
           << game.weight(e, 1) << "\n";
    }
    if (init) os << "init " << game.name(*init) << "\n";
    return os.str();
}

std::string lasso_to_string(const WeightedGame& game, const Lasso& lasso) {
    std::string s;
    for (VertexId v : lasso.stem) s += game.name(v) + " ";
    s += "(";
    for (std::size_t i = 0; i < lasso.cycle.size(); ++i) s += (i ? " " : "") + game.name(lasso.cycle[i]);
    return s + ")^w";
}

std::string serialize_profile(const WeightedGame& game, const StrategyProfile& profile,
                              const std::optional<Lasso>& outcome) {
    std::ostringstream os;
    os << "profile\n";
    if (outcome) {
        os << "outcome";
        for (VertexId v : outcome->stem) os << " " << game.name(v);
        os << " |";
        for (VertexId v : outcome->cycle) os << " " << game.name(v);
        os << "\n";
    }
    for (const MealyStrategy* m : {&profile.strat1, &profile.strat2}) {
        os << "machine " << number_of(m->player) << " " << m->num_states << " " << m->initial << "\n";
        for (int s = 0; s < m->num_states; ++s)
            os << "state " << s << " " << (s < static_cast<int>(m->labels.size()) ? m->labels[s] : "-") << "\n";
        for (int s = 0; s < m->num_states; ++s)
            for (VertexId v = 0; v < game.num_vertices(); ++v)
                os << "update " << s << " " << game.name(v) << " " << m->next_state(s, v) << "\n";
        for (int s = 0; s < m->num_states; ++s)
            for (VertexId v = 0; v < game.num_vertices(); ++v)
                if (game.owner(v) == m->player)
                    os << "choose " << s << " " << game.name(v) << " "
                       << game.name(game.arena().edge(m->choice(s, v)).dst) << "\n";
        os << "end\n";
    }
    return os.str();
}

ParsedProfile parse_profile(std::string_view text, const WeightedGame& game) {
    ParsedProfile result;
    DiagnosticSink sink(result.diagnostics);
    int n = game.num_vertices();
    std::array<std::optional<MealyStrategy>, 2> machines;
    MealyStrategy* current = nullptr;
    std::vector<char> update_set, choose_set;
    bool header = false;
    int current_line = 0;

    auto lines = split_lines(text);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line = static_cast<int>(li) + 1;
        auto toks = tokenize(lines[li]);
        if (toks.empty()) continue;
        std::string_view kw = toks[0].text;
        auto vertex_at = [&](const Token& t) {
            VertexId v = game.vertex(t.text);
            if (v < 0) sink.semantic(line, t.column, "unknown vertex '" + std::string(t.text) + "'");
            return v;
        };
        auto state_at = [&](const Token& t) -> int {
            auto s = parse_int(t.text);
            if (!s) {
                sink.syntax(line, t.column, "expected a state number");
                return -1;
            }
            if (!current || *s < 0 || *s >= current->num_states) {
                sink.semantic(line, t.column, "state " + std::string(t.text) + " out of range");
                return -1;
            }
            return *s;
        };
        if (!header) {
            if (kw != "profile" || toks.size() != 1) {
                sink.syntax(line, toks[0].column, "expected 'profile'");
                return result;
            }
            header = true;
            continue;
        }
        if (kw == "outcome") {
            Lasso l;
            bool in_cycle = false;
            bool bad = false;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].text == "|") {
                    in_cycle = true;
                    continue;
                }
                VertexId v = vertex_at(toks[i]);
                if (v < 0) {
                    bad = true;
                    continue;
                }
                (in_cycle ? l.cycle : l.stem).push_back(v);
            }
            if (!in_cycle || l.cycle.empty()) {
                sink.syntax(line, end_column(toks), "expected '| <cycle vertices>'");
                continue;
            }
            if (!bad) result.outcome = l;
        } else if (kw == "machine") {
            if (current) {
                sink.syntax(line, toks[0].column, "expected 'end' before a new machine");
                continue;
            }
            if (toks.size() != 4) {
                sink.syntax(line, toks[0].column, "expected 'machine <1|2> <states> <initial>'");
                continue;
            }
            auto p = parse_int(toks[1].text), ns = parse_int(toks[2].text), init = parse_int(toks[3].text);
            if (!p || (*p != 1 && *p != 2) || !ns || *ns < 1 || !init || *init < 0 || *init >= *ns) {
                sink.syntax(line, toks[1].column, "malformed machine header");
                continue;
            }
            if (machines[*p - 1]) {
                sink.semantic(line, toks[1].column, "machine " + std::to_string(*p) + " declared twice");
                continue;
            }
            MealyStrategy m;
            m.player = *p == 1 ? Player::One : Player::Two;
            m.num_vertices = n;
            m.num_states = *ns;
            m.initial = *init;
            m.labels.assign(*ns, "-");
            m.update.assign(static_cast<std::size_t>(*ns) * n, 0);
            m.choose.assign(static_cast<std::size_t>(*ns) * n, -1);
            machines[*p - 1] = std::move(m);
            current = &*machines[*p - 1];
            update_set.assign(current->update.size(), 0);
            choose_set.assign(current->choose.size(), 0);
            current_line = line;
        } else if (kw == "state" || kw == "update" || kw == "choose") {
            if (!current) {
                sink.syntax(line, toks[0].column, "'" + std::string(kw) + "' outside a machine block");
                continue;
            }
            std::size_t want = kw == "state" ? 3 : 4;
            if (toks.size() != want) {
                sink.syntax(line, toks[0].column, "wrong number of fields for '" + std::string(kw) + "'");
                continue;
            }
            int s = state_at(toks[1]);
            if (s < 0) continue;
            if (kw == "state") {
                current->labels[s] = std::string(toks[2].text);
                continue;
            }
            VertexId v = vertex_at(toks[2]);
            if (v < 0) continue;
            std::size_t cell = static_cast<std::size_t>(s) * n + v;
            if (kw == "update") {
                int t = state_at(toks[3]);
                if (t < 0) continue;
                current->update[cell] = t;
                update_set[cell] = 1;
            } else {
                VertexId u = vertex_at(toks[3]);
                if (u < 0) continue;
                if (game.owner(v) != current->player) {
                    sink.semantic(line, toks[2].column, "vertex '" + game.name(v) + "' is not owned by this machine's player");
                    continue;
                }
                EdgeId e = game.arena().find_edge(v, u);
                if (e < 0) {
                    sink.semantic(line, toks[3].column, "no edge " + game.name(v) + " -> " + game.name(u));
                    continue;
                }
                current->choose[cell] = e;
                choose_set[cell] = 1;
            }
        } else if (kw == "end") {
            if (!current) {
                sink.syntax(line, toks[0].column, "'end' outside a machine block");
                continue;
            }
            for (int s = 0; s < current->num_states; ++s)
                for (VertexId v = 0; v < n; ++v) {
                    std::size_t cell = static_cast<std::size_t>(s) * n + v;
                    if (!update_set[cell])
                        sink.semantic(current_line, 1, "update missing for state " + std::to_string(s) + " at " + game.name(v));
                    if (game.owner(v) == current->player && !choose_set[cell])
                        sink.semantic(current_line, 1, "choice missing for state " + std::to_string(s) + " at " + game.name(v));
                }
            current = nullptr;
        } else {
            sink.syntax(line, toks[0].column, "unexpected '" + std::string(kw) + "'");
        }
    }
    int last = static_cast<int>(lines.size());
    if (!header) sink.syntax(1, 1, "expected 'profile'");
    if (current) sink.syntax(last, 1, "missing 'end'");
    if (header && !current && (!machines[0] || !machines[1]))
        sink.semantic(last, 1, "a profile needs machines for both players");
    if (result.diagnostics.empty())
        result.profile = StrategyProfile{std::move(*machines[0]), std::move(*machines[1])};
    return result;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string arena_to_dot(const WeightedGame& game, const std::vector<PayoffPair>* values) {
    std::ostringstream os;
    os << "digraph game {\n";
    for (VertexId v = 0; v < game.num_vertices(); ++v) {
        std::string label = game.name(v) + " [P" + std::to_string(number_of(game.owner(v))) + "]";
        if (values) label += "\\n" + (*values)[v].str();
        os << "  v" << v << " [label=\"" << dot_escape(label) << "\", shape="
           << (game.owner(v) == Player::One ? "circle" : "box") << "];\n";
    }
    for (EdgeId e = 0; e < game.num_edges(); ++e) {
        const Edge& ed = game.arena().edge(e);
        os << "  v" << ed.src << " -> v" << ed.dst << " [label=\"(" << game.weight(e, 0) << "," << game.weight(e, 1)
           << ")\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string machine_to_dot(const WeightedGame& game, const MealyStrategy& m) {
    // One node per state; an edge s -> t labelled "v / choice" for each input vertex.
    std::ostringstream os;
    os << "digraph machine {\n";
    for (int s = 0; s < m.num_states; ++s)
        os << "  m" << s << " [label=\"" << s << ":" << dot_escape(s < (int)m.labels.size() ? m.labels[s] : "-") << "\""
           << (s == m.initial ? ", peripheries=2" : "") << "];\n";
    for (int s = 0; s < m.num_states; ++s)
        for (VertexId v = 0; v < game.num_vertices(); ++v) {
            int t = m.next_state(s, v);
            std::string label = game.name(v);
            if (game.owner(v) == m.player) label += " / " + game.name(game.arena().edge(m.choice(t, v)).dst);
            os << "  m" << s << " -> m" << t << " [label=\"" << dot_escape(label) << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace secgame
