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

#ifndef SECGAME_CONSTRAINED_HPP
#define SECGAME_CONSTRAINED_HPP

#include <array>

#include "secgame/game.hpp"
#include "secgame/zerosum.hpp"

namespace secgame {

// mu <= payoff <= nu componentwise.
struct ThresholdBox {
    std::array<ExtRational, 2> mu{ExtRational::neg_inf(), ExtRational::neg_inf()};
    std::array<ExtRational, 2> nu{ExtRational::pos_inf(), ExtRational::pos_inf()};
};

// lo (<|<=) payoff (<|<=) hi for one component.
struct Interval {
    ExtRational lo = ExtRational::neg_inf();
    bool lo_strict = false;
    ExtRational hi = ExtRational::pos_inf();
    bool hi_strict = false;

    void raise(const ExtRational& x, bool strict);
    void lower(const ExtRational& x, bool strict);
    bool empty() const;
    bool contains(const Rational& x) const;
};
using BoxConstraints = std::array<Interval, 2>;

// Is there a secure equilibrium from v0 whose outcome payoff lies in the box?
// Throws UnsupportedError for discounted or mixed measures.
bool decide_constrained_existence(const WeightedGame& game, VertexId v0, const ThresholdBox& box);

// Infinite path from `from` through alive vertices whose payoff meets the constraints.
// Mean-payoff measures (both MPInf or both MPSup).
bool path_in_box_mp(const WeightedGame& game, const VertexSet& alive, VertexId from, const BoxConstraints& box);
// LimInf or LimSup measures.
bool path_in_box_liminf(const WeightedGame& game, const VertexSet& alive, VertexId from, const BoxConstraints& box);

} // namespace secgame

#endif
