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

#ifndef SECGAME_KERNELS_HPP
#define SECGAME_KERNELS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace secgame::kernels {

// Compressed out-edge lists of a scalar game: edges of vertex v are
// [row[v], row[v+1]) in `target`/`weight`.
struct CsrGame {
    std::vector<std::int32_t> row;
    std::vector<std::int32_t> target;
    std::vector<std::int64_t> weight;
    std::vector<std::uint8_t> maximize;  // per vertex

    int num_vertices() const { return static_cast<int>(maximize.size()); }
    int num_edges() const { return static_cast<int>(target.size()); }
};

// One value-iteration step: out[v] = opt_e (weight[e] + in[target[e]]).
// `scratch` must hold num_edges() values. Arithmetic must not overflow int64;
// callers guarantee |in| + max|weight| < 2^62.
using BellmanStep = void (*)(const CsrGame& g, const std::int64_t* in, std::int64_t* out, std::int64_t* scratch);

void bellman_step_scalar(const CsrGame& g, const std::int64_t* in, std::int64_t* out, std::int64_t* scratch);
#if defined(__x86_64__) || defined(_M_X64)
void bellman_step_avx2(const CsrGame& g, const std::int64_t* in, std::int64_t* out, std::int64_t* scratch);
#endif

// 128-bit reference step for magnitudes beyond the int64 guard.
void bellman_step_wide(const CsrGame& g, const __int128* in, __int128* out);

// Picks the best variant for this CPU. SECGAME_KERNEL=scalar forces the reference.
BellmanStep select_bellman_step();
std::string_view bellman_step_name();

} // namespace secgame::kernels

#endif
