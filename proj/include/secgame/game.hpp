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

#ifndef SECGAME_GAME_HPP
#define SECGAME_GAME_HPP

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "secgame/rational.hpp"

namespace secgame {

// Raised for measure combinations or problems the library refuses to solve.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Player : unsigned char { One = 1, Two = 2 };

inline Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }
inline int index_of(Player p) { return p == Player::One ? 0 : 1; }
inline int number_of(Player p) { return p == Player::One ? 1 : 2; }

enum class Measure { Inf, Sup, LimInf, LimSup, MeanPayoffInf, MeanPayoffSup, Discounted };

std::string_view measure_name(Measure m);
std::optional<Measure> measure_from_name(std::string_view name);

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId src;
    VertexId dst;
};

// Directed graph with an ownership partition. Edges keep declaration order;
// out-lists are sorted by edge index so "lowest index" tie-breaks are stable.
class Arena {
public:
    VertexId add_vertex(Player owner);
    EdgeId add_edge(VertexId src, VertexId dst);

    int num_vertices() const { return static_cast<int>(owner_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    Player owner(VertexId v) const { return owner_[v]; }
    void set_owner(VertexId v, Player p) { owner_[v] = p; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgeId>& out(VertexId v) const { return out_[v]; }
    const std::vector<EdgeId>& in(VertexId v) const { return in_[v]; }
    // -1 when absent.
    EdgeId find_edge(VertexId src, VertexId dst) const;

private:
    std::vector<Player> owner_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
};

struct PayoffPair {
    Rational p1;
    Rational p2;

    const Rational& operator[](int i) const { return i == 0 ? p1 : p2; }
    Rational& operator[](int i) { return i == 0 ? p1 : p2; }
    friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
    std::string str() const { return "(" + p1.str() + "," + p2.str() + ")"; }
};

class WeightedGame {
public:
    VertexId add_vertex(std::string name, Player owner);
    EdgeId add_edge(VertexId src, VertexId dst, Rational w1, Rational w2);

    const Arena& arena() const { return arena_; }
    int num_vertices() const { return arena_.num_vertices(); }
    int num_edges() const { return arena_.num_edges(); }
    Player owner(VertexId v) const { return arena_.owner(v); }
    const std::string& name(VertexId v) const { return names_[v]; }
    // -1 when unknown.
    VertexId vertex(std::string_view name) const;

    // Component 0 is r1, component 1 is r2.
    const Rational& weight(EdgeId e, int component) const { return weights_[e][component]; }
    void set_weight(EdgeId e, int component, Rational w) { weights_[e][component] = std::move(w); }

    Measure measure(int component) const { return measures_[component]; }
    void set_measure(int component, Measure m) { measures_[component] = m; }
    const std::optional<Rational>& discount() const { return discount_; }
    void set_discount(std::optional<Rational> d) { discount_ = std::move(d); }

    // Both components use the same measure.
    bool uniform_measure() const { return measures_[0] == measures_[1]; }

    // Same arena, components swapped, owners swapped. Player 2's lexicographic
    // game is player 1's game on the mirror with player labels exchanged.
    WeightedGame mirrored() const;

private:
    Arena arena_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::array<Rational, 2>> weights_;
    std::array<Measure, 2> measures_{Measure::MeanPayoffInf, Measure::MeanPayoffInf};
    std::optional<Rational> discount_;
};

// Ultimately periodic play stem . cycle^omega. The initial vertex is stem[0]
// (or cycle[0] when the stem is empty).
struct Lasso {
    std::vector<VertexId> stem;
    std::vector<VertexId> cycle;

    VertexId initial() const { return stem.empty() ? cycle.front() : stem.front(); }
    friend bool operator==(const Lasso&, const Lasso&) = default;
};

// Edge sequences of a lasso; throws std::invalid_argument when it is not a play of the arena.
struct LassoEdges {
    std::vector<EdgeId> stem;
    std::vector<EdgeId> cycle;
};
LassoEdges lasso_edges(const Arena& arena, const Lasso& lasso);

// Positional strategy of one player: choice[v] is the chosen out-edge for owned v, -1 elsewhere.
struct PositionalStrategy {
    Player player = Player::One;
    std::vector<EdgeId> choice;
};

// Outcome of a positional profile from v, as a lasso with a simple cycle.
Lasso positional_outcome(const Arena& arena, const std::vector<EdgeId>& successor_edge, VertexId from);

// Merges two positional strategies into one successor-edge table over all vertices.
std::vector<EdgeId> profile_edges(const Arena& arena, const PositionalStrategy& a, const PositionalStrategy& b);

std::strong_ordering lex_compare(const PayoffPair& x, const PayoffPair& y, Player which);
inline bool lex_leq(const PayoffPair& x, const PayoffPair& y, Player which) {
    return lex_compare(x, y, which) != std::strong_ordering::greater;
}

// Payoff of one component on the given weight sequences (stem edges, then cycle edges).
Rational eval_component(Measure m, const std::vector<Rational>& stem, const std::vector<Rational>& cycle,
                        const std::optional<Rational>& discount);

PayoffPair eval_lasso_payoff(const WeightedGame& game, const Lasso& lasso);

struct NormalizationInfo {
    Rational a_star;  // <= 0
    Rational b_star;  // positive integer
    Rational max_weight1;
    Rational max_weight2;
    Rational max_weight;
};

// Affine rescaling w -> w*b - a*b that makes every weight a natural number.
std::pair<WeightedGame, NormalizationInfo> normalize_weights(const WeightedGame& game);
Rational denormalize(const Rational& v, const NormalizationInfo& info);
PayoffPair denormalize_value(const PayoffPair& v, const NormalizationInfo& info, Measure measure);

struct Violation {
    enum class Kind { Deadlock, DanglingEdge, MissingDiscount, DiscountOutOfRange, DuplicateEdge };
    Kind kind;
    std::string message;
};
std::vector<Violation> validate_game(const WeightedGame& game);

} // namespace secgame

#endif
