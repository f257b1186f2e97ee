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

#ifndef SECGAME_LP_HPP
#define SECGAME_LP_HPP

#include <vector>

#include "secgame/rational.hpp"

namespace secgame {

// Rows a.x > b (strict) and a.x >= b over free rational variables.
struct LinearRow {
    std::vector<Rational> coeff;
    Rational bound;
};

struct LinearSystem {
    int num_vars = 0;
    std::vector<LinearRow> strict_rows;
    std::vector<LinearRow> nonstrict_rows;

    void add_strict(std::vector<Rational> coeff, Rational bound);
    void add_nonstrict(std::vector<Rational> coeff, Rational bound);
    void add_equal(std::vector<Rational> coeff, Rational bound);
};

struct LpResult {
    bool feasible = false;
    std::vector<Rational> witness;  // satisfies every row when feasible
};

// Exact feasibility. Strict rows share one slack y: a.x - y >= b, y <= 1, and the
// system is feasible iff the largest such y is positive. Simplex with Bland's rule.
LpResult lp_feasible(const LinearSystem& system);

} // namespace secgame

#endif
