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

// AVX2 variant of the value-iteration step. Candidate sums are formed four
// edges at a time with a gather; the per-vertex reduction stays scalar because
// out-degrees are small and irregular.

#include "secgame/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <algorithm>
#include <immintrin.h>

namespace secgame::kernels {

__attribute__((target("avx2"))) void bellman_step_avx2(const CsrGame& g, const std::int64_t* in,
                                                        std::int64_t* out, std::int64_t* scratch) {
    int m = g.num_edges();
    const std::int32_t* tgt = g.target.data();
    const std::int64_t* w = g.weight.data();
    int e = 0;
    for (; e + 4 <= m; e += 4) {
        __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tgt + e));
        __m256i vals = _mm256_i32gather_epi64(reinterpret_cast<const long long*>(in), idx, 8);
        __m256i ws = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + e));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(scratch + e), _mm256_add_epi64(vals, ws));
    }
    for (; e < m; ++e) scratch[e] = w[e] + in[tgt[e]];

    int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        int lo = g.row[v], hi = g.row[v + 1];
        std::int64_t best = scratch[lo];
        if (g.maximize[v]) {
            for (int k = lo + 1; k < hi; ++k) best = std::max(best, scratch[k]);
        } else {
            for (int k = lo + 1; k < hi; ++k) best = std::min(best, scratch[k]);
        }
        out[v] = best;
    }
}

} // namespace secgame::kernels

#endif
