// Copyright 2026 The paulipart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mpopcnt. Only reached after a runtime CPU check.
// Keep this file free of standard library templates (see kernels.hpp).

#include <immintrin.h>

#include "paulipart/simd/kernels.hpp"

namespace paulipart::simd {
namespace {

inline int popcount64(std::uint64_t v) {
    return __builtin_popcountll(v);
}

std::uint64_t and_popcount_avx2(const std::uint64_t *a, const std::uint64_t *b, std::size_t words) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= words; w += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + w));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + w));
        __m256i v = _mm256_and_si256(va, vb);
        __m256i lo = _mm256_and_si256(v, low);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; w < words; ++w) {
        total += static_cast<std::uint64_t>(popcount64(a[w] & b[w]));
    }
    return total;
}

// Lanes whose 64-bit value has even popcount become all-ones.
inline __m256i even_parity_mask(__m256i p) {
    p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 32));
    p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 16));
    p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 8));
    p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 4));
    p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 2));
    p = _mm256_xor_si256(p, _mm256_srli_epi64(p, 1));
    p = _mm256_and_si256(p, _mm256_set1_epi64x(1));
    return _mm256_cmpeq_epi64(p, _mm256_setzero_si256());
}

void commute_row_avx2(const MaskColumns &cols, const std::uint64_t *ax, const std::uint64_t *az, bool qwc,
                      std::uint64_t *out) {
    const std::size_t n = cols.n_strings;
    const std::size_t out_words = (n + 63) / 64;
    for (std::size_t w = 0; w < out_words; ++w) {
        out[w] = 0;
    }
    std::size_t i = 0;
    if (cols.words == 1) {
        const __m256i bx = _mm256_set1_epi64x(static_cast<long long>(ax[0]));
        const __m256i bz = _mm256_set1_epi64x(static_cast<long long>(az[0]));
        for (; i + 4 <= n; i += 4) {
            __m256i xs = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(cols.x + i));
            __m256i zs = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(cols.z + i));
            __m256i t = _mm256_xor_si256(_mm256_and_si256(bx, zs), _mm256_and_si256(bz, xs));
            __m256i m = qwc ? _mm256_cmpeq_epi64(t, _mm256_setzero_si256()) : even_parity_mask(t);
            auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(m)));
            out[i >> 6] |= bits << (i & 63);
        }
    } else {
        for (; i + 4 <= n; i += 4) {
            __m256i anti = _mm256_setzero_si256();
            __m256i parity = _mm256_setzero_si256();
            for (std::size_t w = 0; w < cols.words; ++w) {
                const __m256i bx = _mm256_set1_epi64x(static_cast<long long>(ax[w]));
                const __m256i bz = _mm256_set1_epi64x(static_cast<long long>(az[w]));
                __m256i xs = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(cols.x + w * cols.stride + i));
                __m256i zs = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(cols.z + w * cols.stride + i));
                __m256i t = _mm256_xor_si256(_mm256_and_si256(bx, zs), _mm256_and_si256(bz, xs));
                anti = _mm256_or_si256(anti, t);
                parity = _mm256_xor_si256(parity, t);
            }
            __m256i m = qwc ? _mm256_cmpeq_epi64(anti, _mm256_setzero_si256()) : even_parity_mask(parity);
            auto bits = static_cast<std::uint64_t>(_mm256_movemask_pd(_mm256_castsi256_pd(m)));
            out[i >> 6] |= bits << (i & 63);
        }
    }
    for (; i < n; ++i) {
        std::uint64_t anti = 0;
        std::uint64_t parity = 0;
        for (std::size_t w = 0; w < cols.words; ++w) {
            std::uint64_t t = (ax[w] & cols.z[w * cols.stride + i]) ^ (az[w] & cols.x[w * cols.stride + i]);
            anti |= t;
            parity ^= t;
        }
        bool commutes = qwc ? anti == 0 : (popcount64(parity) & 1) == 0;
        if (commutes) {
            out[i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    }
}

void gather_bits_avx2(const std::uint64_t *bits, const std::uint32_t *idx, std::size_t n, std::uint64_t *out) {
    const std::size_t out_words = (n + 63) / 64;
    for (std::size_t w = 0; w < out_words; ++w) {
        out[w] = 0;
    }
    const auto *words32 = reinterpret_cast<const int *>(bits);
    const __m256i five_bits = _mm256_set1_epi32(31);
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        __m256i j = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(idx + k));
        __m256i g = _mm256_i32gather_epi32(words32, _mm256_srli_epi32(j, 5), 4);
        __m256i b = _mm256_srlv_epi32(g, _mm256_and_si256(j, five_bits));
        b = _mm256_slli_epi32(b, 31);
        auto packed = static_cast<std::uint64_t>(_mm256_movemask_ps(_mm256_castsi256_ps(b)));
        out[k >> 6] |= packed << (k & 63);
    }
    for (; k < n; ++k) {
        std::uint32_t j = idx[k];
        std::uint64_t bit = (bits[j >> 6] >> (j & 63)) & 1;
        out[k >> 6] |= bit << (k & 63);
    }
}

void accumulate_bits_avx2(std::int32_t *acc, const std::uint64_t *bits, std::size_t n, std::int32_t delta) {
    const __m256i lane_bits = _mm256_setr_epi32(1, 2, 4, 8, 16, 32, 64, 128);
    const __m256i vdelta = _mm256_set1_epi32(delta);
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        auto byte = static_cast<int>((bits[k >> 6] >> (k & 63)) & 0xff);
        if (byte == 0) {
            continue;
        }
        __m256i m = _mm256_and_si256(_mm256_set1_epi32(byte), lane_bits);
        m = _mm256_cmpeq_epi32(m, lane_bits);
        __m256i *p = reinterpret_cast<__m256i *>(acc + k);
        _mm256_storeu_si256(p, _mm256_add_epi32(_mm256_loadu_si256(p), _mm256_and_si256(m, vdelta)));
    }
    for (; k < n; ++k) {
        if ((bits[k >> 6] >> (k & 63)) & 1) {
            acc[k] += delta;
        }
    }
}

void classify_flips_avx2(const FlipInputs &in, FlipOutputs &out) {
    std::size_t nc = 0;
    std::size_t nm = 0;
    const __m128i selected = _mm_set1_epi32(in.selected);
    const __m128i one = _mm_set1_epi32(1);
    const __m256d penalty = _mm256_set1_pd(in.penalty);
    const __m256d offset = _mm256_set1_pd(in.offset);
    const __m256d cutoff = _mm256_set1_pd(in.cutoff);
    const __m256d zero = _mm256_setzero_pd();
    alignas(32) double shifted_lanes[4];
    std::size_t i = 0;
    for (; i + 4 <= in.n; i += 4) {
        int packed_state;
        __builtin_memcpy(&packed_state, in.state + i, 4);
        __m128i state = _mm_cvtepu8_epi32(_mm_cvtsi32_si128(packed_state));
        __m128i comm = _mm_loadu_si128(reinterpret_cast<const __m128i *>(in.commuting + i));
        __m128i conf_i = _mm_sub_epi32(_mm_sub_epi32(selected, state), comm);
        __m128i sign_i = _mm_sub_epi32(one, _mm_add_epi32(state, state));
        __m256d conf = _mm256_cvtepi32_pd(conf_i);
        __m256d sign = _mm256_cvtepi32_pd(sign_i);
        __m256d lin = _mm256_loadu_pd(in.linear + i);
        __m256d delta = _mm256_mul_pd(sign, _mm256_sub_pd(_mm256_mul_pd(penalty, conf), lin));
        __m256d shifted = _mm256_sub_pd(delta, offset);
        int certain = _mm256_movemask_pd(_mm256_cmp_pd(shifted, zero, _CMP_LE_OQ));
        int maybe = _mm256_movemask_pd(
            _mm256_and_pd(_mm256_cmp_pd(shifted, zero, _CMP_GT_OQ), _mm256_cmp_pd(shifted, cutoff, _CMP_LT_OQ)));
        if ((certain | maybe) == 0) {
            continue;
        }
        _mm256_store_pd(shifted_lanes, shifted);
        for (int lane = 0; lane < 4; ++lane) {
            if (certain & (1 << lane)) {
                out.certain[nc++] = static_cast<std::uint32_t>(i + lane);
            } else if (maybe & (1 << lane)) {
                out.maybe[nm] = static_cast<std::uint32_t>(i + lane);
                out.maybe_delta[nm] = shifted_lanes[lane];
                ++nm;
            }
        }
    }
    for (; i < in.n; ++i) {
        double conf = static_cast<double>(in.selected - static_cast<std::int32_t>(in.state[i]) - in.commuting[i]);
        double sign = in.state[i] ? -1.0 : 1.0;
        double delta = sign * (in.penalty * conf - in.linear[i]);
        double shifted = delta - in.offset;
        if (shifted <= 0.0) {
            out.certain[nc++] = static_cast<std::uint32_t>(i);
        } else if (shifted < in.cutoff) {
            out.maybe[nm] = static_cast<std::uint32_t>(i);
            out.maybe_delta[nm] = shifted;
            ++nm;
        }
    }
    out.n_certain = nc;
    out.n_maybe = nm;
}

const KernelTable kAvx2{
    "avx2",
    and_popcount_avx2,
    commute_row_avx2,
    gather_bits_avx2,
    accumulate_bits_avx2,
    classify_flips_avx2,
};

}  // namespace

// Defined here, wrapped with a CPU check in dispatch.cpp.
const KernelTable *avx2_table_unchecked() {
    return &kAvx2;
}

}  // namespace paulipart::simd
