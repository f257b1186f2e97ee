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

#include "secgame/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace secgame::kernels {

void bellman_step_scalar(const CsrGame& g, const std::int64_t* in, std::int64_t* out, std::int64_t*) {
    int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        int lo = g.row[v], hi = g.row[v + 1];
        std::int64_t best = g.weight[lo] + in[g.target[lo]];
        if (g.maximize[v]) {
            for (int e = lo + 1; e < hi; ++e) best = std::max(best, g.weight[e] + in[g.target[e]]);
        } else {
            for (int e = lo + 1; e < hi; ++e) best = std::min(best, g.weight[e] + in[g.target[e]]);
        }
        out[v] = best;
    }
}

void bellman_step_wide(const CsrGame& g, const __int128* in, __int128* out) {
    int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        int lo = g.row[v], hi = g.row[v + 1];
        __int128 best = g.weight[lo] + in[g.target[lo]];
        for (int e = lo + 1; e < hi; ++e) {
            __int128 c = g.weight[e] + in[g.target[e]];
            best = g.maximize[v] ? std::max(best, c) : std::min(best, c);
        }
        out[v] = best;
    }
}

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

bool forced_scalar() {
    const char* env = std::getenv("SECGAME_KERNEL");
    return env && std::strcmp(env, "scalar") == 0;
}

} // namespace

BellmanStep select_bellman_step() {
#if defined(__x86_64__) || defined(_M_X64)
    if (!forced_scalar() && cpu_has_avx2()) return &bellman_step_avx2;
#endif
    return &bellman_step_scalar;
}

std::string_view bellman_step_name() {
    return select_bellman_step() == &bellman_step_scalar ? "scalar" : "avx2";
}

} // namespace secgame::kernels
